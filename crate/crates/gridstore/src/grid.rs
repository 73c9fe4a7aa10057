//! Workspace geometry and problem-instance types.
//!
//! The storage area is an `rows x cols` grid of unit cells. Row 1 is the
//! *front row*: the open side through which every load enters and leaves.
//! Coordinates are 1-indexed `(row, col)` with column 1 on the left.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Label of a load. Loads in an instance are labeled `1..=n`.
pub type Load = usize;

/// Row index of the front (open) row.
pub const FRONT_ROW: usize = 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("grid dimensions must be at least 1x1, got {rows}x{cols}")]
    EmptyGrid { rows: usize, cols: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("arrival sequence is not a permutation of 1..={n}")]
    ArrivalNotPermutation { n: usize },
    #[error("departure sequence is not a permutation of 1..={n}")]
    DepartureNotPermutation { n: usize },
    #[error("{n} loads exceed the {cells}-cell capacity of the grid")]
    TooManyLoads { n: usize, cells: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("cell {cell} is out of bounds")]
    OutOfBounds { cell: Cell },
    #[error("loads {first} and {second} are both placed at {cell}")]
    SharedCell { first: Load, second: Load, cell: Cell },
}

/// A rectangular storage grid, open along row 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub rows: usize,
    pub cols: usize,
}

impl GridSpec {
    pub fn new(rows: usize, cols: usize) -> Result<Self, GridError> {
        if rows == 0 || cols == 0 {
            return Err(GridError::EmptyGrid { rows, cols });
        }
        Ok(GridSpec { rows, cols })
    }

    pub fn cell_count(&self) -> usize {
        self.rows * self.cols
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.rows).contains(&cell.row) && (1..=self.cols).contains(&cell.col)
    }

    /// Dense index of a cell, row-major from the front-left corner.
    pub fn index(&self, cell: Cell) -> usize {
        debug_assert!(self.contains(cell));
        (cell.row - 1) * self.cols + (cell.col - 1)
    }

    /// All cells in row-major order starting at the front row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.rows).flat_map(move |row| (1..=self.cols).map(move |col| Cell { row, col }))
    }

    /// In-bounds 4-neighbors of a cell.
    pub fn neighbors(&self, cell: Cell) -> impl Iterator<Item = Cell> + '_ {
        let grid = *self;
        cell.adjacent_candidates()
            .into_iter()
            .flatten()
            .filter(move |c| grid.contains(*c))
    }
}

/// A single grid cell. Ordered row-major so front cells sort first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_front(&self) -> bool {
        self.row == FRONT_ROW
    }

    pub fn is_adjacent(&self, other: Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }

    fn adjacent_candidates(self) -> [Option<Cell>; 4] {
        [
            (self.row > 1).then(|| Cell::new(self.row - 1, self.col)),
            Some(Cell::new(self.row + 1, self.col)),
            (self.col > 1).then(|| Cell::new(self.row, self.col - 1)),
            Some(Cell::new(self.row, self.col + 1)),
        ]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

// Cells serialize as `[row, col]` pairs in every file format.
impl Serialize for Cell {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.row, self.col).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (row, col) = <(usize, usize)>::deserialize(deserializer)?;
        Ok(Cell { row, col })
    }
}

/// A storage-and-retrieval problem: `n` loads arrive in order `arrival` and
/// must later depart in order `departure`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    #[serde(flatten)]
    pub grid: GridSpec,
    pub arrival: Vec<Load>,
    pub departure: Vec<Load>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lookahead: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
}

impl Instance {
    pub fn new(
        grid: GridSpec,
        arrival: Vec<Load>,
        departure: Vec<Load>,
    ) -> Result<Self, InstanceError> {
        let n = arrival.len();
        if n > grid.cell_count() {
            return Err(InstanceError::TooManyLoads {
                n,
                cells: grid.cell_count(),
            });
        }
        if !is_permutation(&arrival) {
            return Err(InstanceError::ArrivalNotPermutation { n });
        }
        if departure.len() != n || !is_permutation(&departure) {
            return Err(InstanceError::DepartureNotPermutation { n });
        }
        Ok(Instance {
            grid,
            arrival,
            departure,
            lookahead: None,
            budget: None,
        })
    }

    /// Instance whose departure order is `1..=n`, the normalized form.
    pub fn with_identity_departure(
        grid: GridSpec,
        arrival: Vec<Load>,
    ) -> Result<Self, InstanceError> {
        let departure = (1..=arrival.len()).collect();
        Instance::new(grid, arrival, departure)
    }

    pub fn n(&self) -> usize {
        self.arrival.len()
    }

    /// `rank[load - 1]` = 1-based position of `load` in the departure order.
    pub fn departure_ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.n()];
        for (i, &load) in self.departure.iter().enumerate() {
            ranks[load - 1] = i + 1;
        }
        ranks
    }
}

pub(crate) fn is_permutation(seq: &[Load]) -> bool {
    let n = seq.len();
    let mut seen = vec![false; n];
    for &x in seq {
        if x == 0 || x > n || seen[x - 1] {
            return false;
        }
        seen[x - 1] = true;
    }
    true
}

/// An injective assignment of loads to cells: the state of the workspace
/// between the storage and retrieval phases.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Arrangement {
    placement: BTreeMap<Load, Cell>,
}

impl Arrangement {
    pub fn new(
        grid: GridSpec,
        placement: impl IntoIterator<Item = (Load, Cell)>,
    ) -> Result<Self, ArrangementError> {
        let mut by_cell: BTreeMap<Cell, Load> = BTreeMap::new();
        let mut map = BTreeMap::new();
        for (load, cell) in placement {
            if !grid.contains(cell) {
                return Err(ArrangementError::OutOfBounds { cell });
            }
            if let Some(&first) = by_cell.get(&cell) {
                return Err(ArrangementError::SharedCell {
                    first,
                    second: load,
                    cell,
                });
            }
            by_cell.insert(cell, load);
            map.insert(load, cell);
        }
        Ok(Arrangement { placement: map })
    }

    pub fn len(&self) -> usize {
        self.placement.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placement.is_empty()
    }

    pub fn cell_of(&self, load: Load) -> Option<Cell> {
        self.placement.get(&load).copied()
    }

    pub fn load_at(&self, cell: Cell) -> Option<Load> {
        self.placement
            .iter()
            .find(|(_, &c)| c == cell)
            .map(|(&l, _)| l)
    }

    /// Loads in ascending label order.
    pub fn loads(&self) -> impl Iterator<Item = Load> + '_ {
        self.placement.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Load, Cell)> + '_ {
        self.placement.iter().map(|(&l, &c)| (l, c))
    }
}

impl FromIterator<(Load, Cell)> for Arrangement {
    /// Unchecked construction for internal callers that guarantee injectivity.
    fn from_iter<T: IntoIterator<Item = (Load, Cell)>>(iter: T) -> Self {
        Arrangement {
            placement: iter.into_iter().collect(),
        }
    }
}
