//! Live workspace state and collision-free action validation.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::action::{Action, ActionKind};
use crate::grid::{Arrangement, Cell, GridSpec, Load};

/// Violations of the action semantics. Each index refers to the first
/// offending position on the action's path.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    #[error("path is empty")]
    EmptyPath,
    #[error("path cell {index} at {cell} is out of bounds")]
    OutOfBounds { index: usize, cell: Cell },
    #[error("path cell {index} is not 4-adjacent to its predecessor")]
    NotAdjacentStep { index: usize },
    #[error("path cell {index} at {cell} is occupied")]
    CellOccupied { index: usize, cell: Cell },
    #[error("path endpoint at index {index} violates the action kind's rules")]
    WrongEndpoint { index: usize },
    #[error("load {load} is not in the workspace")]
    LoadNotPresent { load: Load },
    #[error("load {load} is already in the workspace")]
    LoadAlreadyPresent { load: Load },
}

/// Which loads sit where. The single mutable state of the executor; planners
/// keep private copies while simulating.
#[derive(Debug, Clone)]
pub struct Occupancy {
    grid: GridSpec,
    cells: Vec<Option<Load>>,
    positions: BTreeMap<Load, Cell>,
}

impl Occupancy {
    pub fn new(grid: GridSpec) -> Self {
        Occupancy {
            grid,
            cells: vec![None; grid.cell_count()],
            positions: BTreeMap::new(),
        }
    }

    pub fn from_arrangement(grid: GridSpec, arrangement: &Arrangement) -> Self {
        let mut occ = Occupancy::new(grid);
        for (load, cell) in arrangement.iter() {
            occ.place(load, cell);
        }
        occ
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn load_at(&self, cell: Cell) -> Option<Load> {
        if self.grid.contains(cell) {
            self.cells[self.grid.index(cell)]
        } else {
            None
        }
    }

    pub fn is_empty_cell(&self, cell: Cell) -> bool {
        self.grid.contains(cell) && self.cells[self.grid.index(cell)].is_none()
    }

    pub fn position(&self, load: Load) -> Option<Cell> {
        self.positions.get(&load).copied()
    }

    pub fn contains_load(&self, load: Load) -> bool {
        self.positions.contains_key(&load)
    }

    pub fn load_count(&self) -> usize {
        self.positions.len()
    }

    /// Loads and their cells in ascending label order.
    pub fn iter(&self) -> impl Iterator<Item = (Load, Cell)> + '_ {
        self.positions.iter().map(|(&l, &c)| (l, c))
    }

    pub fn to_arrangement(&self) -> Arrangement {
        self.iter().collect()
    }

    pub(crate) fn place(&mut self, load: Load, cell: Cell) {
        debug_assert!(self.is_empty_cell(cell));
        debug_assert!(!self.positions.contains_key(&load));
        self.cells[self.grid.index(cell)] = Some(load);
        self.positions.insert(load, cell);
    }

    pub(crate) fn remove(&mut self, load: Load) -> Cell {
        let cell = self.positions.remove(&load).expect("load present");
        self.cells[self.grid.index(cell)] = None;
        cell
    }

    /// Check an action against the current state without applying it.
    ///
    /// Every path cell must be in bounds, consecutive cells 4-adjacent, and
    /// every cell other than the moving load's own origin empty. Stores start
    /// at the front row; retrieves end there; relocations end at an empty
    /// cell distinct from the origin.
    pub fn validate_action(&self, action: &Action) -> Result<(), Violation> {
        let path = &action.path;
        let first = *path.first().ok_or(Violation::EmptyPath)?;
        let last = *path.last().expect("nonempty");

        for (i, &cell) in path.iter().enumerate() {
            if !self.grid.contains(cell) {
                return Err(Violation::OutOfBounds { index: i, cell });
            }
            if i > 0 && !path[i - 1].is_adjacent(cell) {
                return Err(Violation::NotAdjacentStep { index: i });
            }
        }

        let origin = match action.kind {
            ActionKind::Store => {
                if self.contains_load(action.load) {
                    return Err(Violation::LoadAlreadyPresent { load: action.load });
                }
                if !first.is_front() {
                    return Err(Violation::WrongEndpoint { index: 0 });
                }
                None
            }
            ActionKind::Retrieve => {
                let at = self
                    .position(action.load)
                    .ok_or(Violation::LoadNotPresent { load: action.load })?;
                if first != at {
                    return Err(Violation::WrongEndpoint { index: 0 });
                }
                if !last.is_front() {
                    return Err(Violation::WrongEndpoint {
                        index: path.len() - 1,
                    });
                }
                Some(at)
            }
            ActionKind::Relocate => {
                let at = self
                    .position(action.load)
                    .ok_or(Violation::LoadNotPresent { load: action.load })?;
                if first != at {
                    return Err(Violation::WrongEndpoint { index: 0 });
                }
                if last == at {
                    return Err(Violation::WrongEndpoint {
                        index: path.len() - 1,
                    });
                }
                Some(at)
            }
        };

        for (i, &cell) in path.iter().enumerate() {
            if Some(cell) == origin {
                continue;
            }
            if self.load_at(cell).is_some() {
                return Err(Violation::CellOccupied { index: i, cell });
            }
        }
        Ok(())
    }

    /// Validate and apply. The state is unchanged when an error is returned.
    pub fn apply_action(&mut self, action: &Action) -> Result<(), Violation> {
        self.validate_action(action)?;
        match action.kind {
            ActionKind::Store => {
                self.place(action.load, *action.path.last().expect("nonempty"));
            }
            ActionKind::Retrieve => {
                self.remove(action.load);
            }
            ActionKind::Relocate => {
                self.remove(action.load);
                self.place(action.load, *action.path.last().expect("nonempty"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(cells: &[(usize, usize)]) -> Vec<Cell> {
        cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn straight_store_into_empty_grid_is_ok() {
        let occ = Occupancy::new(GridSpec::new(3, 3).unwrap());
        let store = Action::store(9, path(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(occ.validate_action(&store), Ok(()));
    }

    #[test]
    fn store_onto_occupied_cell_is_rejected() {
        let mut occ = Occupancy::new(GridSpec::new(3, 3).unwrap());
        occ.apply_action(&Action::store(1, path(&[(1, 1)]))).unwrap();
        let err = occ
            .validate_action(&Action::store(2, path(&[(1, 1)])))
            .unwrap_err();
        assert_eq!(
            err,
            Violation::CellOccupied {
                index: 0,
                cell: Cell::new(1, 1)
            }
        );
    }

    #[test]
    fn retrieve_through_occupied_cell_names_first_offender() {
        let grid = GridSpec::new(2, 2).unwrap();
        let mut occ = Occupancy::new(grid);
        occ.apply_action(&Action::store(1, path(&[(1, 1)]))).unwrap();
        occ.apply_action(&Action::store(2, path(&[(1, 2), (2, 2), (2, 1)])))
            .unwrap();
        occ.apply_action(&Action::store(3, path(&[(1, 2), (2, 2)])))
            .unwrap();
        let err = occ
            .validate_action(&Action::retrieve(3, path(&[(2, 2), (2, 1), (1, 1)])))
            .unwrap_err();
        assert_eq!(
            err,
            Violation::CellOccupied {
                index: 1,
                cell: Cell::new(2, 1)
            }
        );
    }

    #[test]
    fn apply_store_places_load_at_destination() {
        let mut occ = Occupancy::new(GridSpec::new(3, 3).unwrap());
        occ.apply_action(&Action::store(9, path(&[(1, 1), (2, 1), (3, 1)])))
            .unwrap();
        assert_eq!(occ.position(9), Some(Cell::new(3, 1)));
        assert_eq!(occ.load_count(), 1);
    }

    #[test]
    fn single_cell_retrieve_empties_the_workspace() {
        let mut occ = Occupancy::new(GridSpec::new(3, 3).unwrap());
        occ.apply_action(&Action::store(1, path(&[(1, 1)]))).unwrap();
        occ.apply_action(&Action::retrieve(1, path(&[(1, 1)])))
            .unwrap();
        assert_eq!(occ.load_count(), 0);
    }

    #[test]
    fn relocate_to_own_cell_is_a_wrong_endpoint() {
        let mut occ = Occupancy::new(GridSpec::new(3, 3).unwrap());
        occ.apply_action(&Action::store(1, path(&[(1, 1)]))).unwrap();
        let err = occ
            .apply_action(&Action::relocate(1, path(&[(1, 1)])))
            .unwrap_err();
        assert_eq!(err, Violation::WrongEndpoint { index: 0 });
        assert_eq!(occ.position(1), Some(Cell::new(1, 1)));
    }

    #[test]
    fn out_of_bounds_and_non_adjacent_steps_are_rejected() {
        let occ = Occupancy::new(GridSpec::new(2, 2).unwrap());
        let oob = occ
            .validate_action(&Action::store(1, path(&[(1, 1), (1, 0)])))
            .unwrap_err();
        assert_eq!(
            oob,
            Violation::OutOfBounds {
                index: 1,
                cell: Cell::new(1, 0)
            }
        );
        let jump = occ
            .validate_action(&Action::store(1, path(&[(1, 1), (2, 2)])))
            .unwrap_err();
        assert_eq!(jump, Violation::NotAdjacentStep { index: 1 });
    }

    #[test]
    fn store_must_start_at_the_front_row() {
        let occ = Occupancy::new(GridSpec::new(3, 3).unwrap());
        let err = occ
            .validate_action(&Action::store(1, path(&[(2, 1), (3, 1)])))
            .unwrap_err();
        assert_eq!(err, Violation::WrongEndpoint { index: 0 });
    }
}
