//! Actions, plans, and cost accounting.
//!
//! An action moves one load along an explicit path of cells. Path length is
//! counted in *cells*, not steps; a store of a front-row cell has distance 1.

use serde::{Deserialize, Serialize};

use crate::grid::{Cell, Load};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    /// Bring an arriving load from the front row to an empty cell.
    Store,
    /// Carry a load from its cell out through the front row.
    Retrieve,
    /// Move an already-stored load to another empty cell.
    Relocate,
}

/// One pick-up-and-drop-off movement of a load.
///
/// `temporary` marks out-and-back moves of a blocking load around another
/// load's retrieval; the executor exempts them from the arrival/departure
/// order checks but counts them in every cost metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Action {
    pub kind: ActionKind,
    pub load: Load,
    pub path: Vec<Cell>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub temporary: bool,
}

impl Action {
    pub fn store(load: Load, path: Vec<Cell>) -> Self {
        Action {
            kind: ActionKind::Store,
            load,
            path,
            temporary: false,
        }
    }

    pub fn retrieve(load: Load, path: Vec<Cell>) -> Self {
        Action {
            kind: ActionKind::Retrieve,
            load,
            path,
            temporary: false,
        }
    }

    pub fn relocate(load: Load, path: Vec<Cell>) -> Self {
        Action {
            kind: ActionKind::Relocate,
            load,
            path,
            temporary: false,
        }
    }

    pub fn temporary(mut self) -> Self {
        self.temporary = true;
        self
    }

    /// Distance contributed by this action: the number of cells on its path.
    pub fn distance(&self) -> usize {
        self.path.len()
    }

    pub fn destination(&self) -> Option<Cell> {
        self.path.last().copied()
    }

    pub fn origin(&self) -> Option<Cell> {
        self.path.first().copied()
    }
}

/// An ordered list of actions, executable from the empty workspace.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub actions: Vec<Action>,
}

impl Plan {
    pub fn new(actions: Vec<Action>) -> Self {
        Plan { actions }
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn relocation_count(&self) -> usize {
        self.actions
            .iter()
            .filter(|a| a.kind == ActionKind::Relocate)
            .count()
    }
}

/// True iff the path stays in one column apart from at most one single-column
/// lateral step. Purely vertical paths qualify.
pub fn is_column_adjacent(path: &[Cell]) -> bool {
    path.windows(2)
        .map(|w| w[0].col.abs_diff(w[1].col))
        .sum::<usize>()
        <= 1
}

/// Aggregate costs of an executed plan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub stores: usize,
    pub retrieves: usize,
    pub relocations: usize,
    pub total_actions: usize,
    /// Sum over actions of the number of cells on the path.
    pub total_distance: usize,
    pub store_distance: usize,
    pub retrieve_distance: usize,
    pub relocate_distance: usize,
    pub max_actions_per_load: usize,
    /// Out-and-back moves of blockers (both legs counted).
    pub temporary_moves: usize,
    /// Actions strictly after the last non-temporary store.
    pub retrieval_phase_actions: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(cells: &[(usize, usize)]) -> Vec<Cell> {
        cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn straight_path_is_column_adjacent() {
        assert!(is_column_adjacent(&path(&[(1, 2), (2, 2), (3, 2)])));
    }

    #[test]
    fn single_turn_is_column_adjacent() {
        assert!(is_column_adjacent(&path(&[(1, 2), (2, 2), (2, 3)])));
    }

    #[test]
    fn two_lateral_steps_are_not_column_adjacent() {
        assert!(!is_column_adjacent(&path(&[
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 3)
        ])));
    }

    #[test]
    fn single_cell_path_is_column_adjacent() {
        assert!(is_column_adjacent(&path(&[(1, 5)])));
    }

    #[test]
    fn action_distance_counts_cells() {
        let a = Action::store(1, path(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(a.distance(), 3);
        assert_eq!(a.destination(), Some(Cell::new(3, 1)));
    }
}
