//! Deterministic path construction over a live occupancy.
//!
//! Planners prefer column-adjacent paths: straight paths first, then paths
//! with a single lateral step (smaller turn column first, then the
//! lexicographically smallest cell sequence). A breadth-first fallback finds
//! the lexicographically smallest shortest path when no column-adjacent one
//! exists.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::grid::{Cell, FRONT_ROW};
use crate::occupancy::Occupancy;

/// Path for storing a load at `dest`: from an empty front-row cell to `dest`
/// through empty cells.
pub(crate) fn store_path(occ: &Occupancy, dest: Cell) -> Option<Vec<Cell>> {
    if !occ.is_empty_cell(dest) {
        return None;
    }
    let col_empty_up_to =
        |col: usize, top: usize| (1..=top).all(|r| occ.is_empty_cell(Cell::new(r, col)));
    if col_empty_up_to(dest.col, dest.row) {
        return Some((1..=dest.row).map(|r| Cell::new(r, dest.col)).collect());
    }
    for side in turn_columns(dest.col, occ.grid().cols) {
        for t in 1..=dest.row {
            let ok = col_empty_up_to(side, t)
                && (t..=dest.row).all(|r| occ.is_empty_cell(Cell::new(r, dest.col)));
            if ok {
                let mut path: Vec<Cell> = (1..=t).map(|r| Cell::new(r, side)).collect();
                path.extend((t..=dest.row).map(|r| Cell::new(r, dest.col)));
                return Some(path);
            }
        }
    }
    lex_shortest_to_cell_from_front(occ, dest)
}

/// Path for retrieving the load at `from`: from its cell to the front row
/// through empty cells. The origin is exempt from the emptiness check.
pub(crate) fn retrieve_path(occ: &Occupancy, from: Cell) -> Option<Vec<Cell>> {
    let col_clear_below = |col: usize, top: usize, bottom: usize| {
        (bottom..top).all(|r| occ.is_empty_cell(Cell::new(r, col)))
    };
    if col_clear_below(from.col, from.row, 1) {
        return Some((1..=from.row).rev().map(|r| Cell::new(r, from.col)).collect());
    }
    for side in turn_columns(from.col, occ.grid().cols) {
        for t in 1..=from.row {
            let ok = col_clear_below(from.col, from.row, t)
                && (1..=t).all(|r| occ.is_empty_cell(Cell::new(r, side)));
            if ok {
                let mut path: Vec<Cell> =
                    (t..=from.row).rev().map(|r| Cell::new(r, from.col)).collect();
                path.extend((1..=t).rev().map(|r| Cell::new(r, side)));
                return Some(path);
            }
        }
    }
    let targets: Vec<Cell> = front_cells(occ);
    lex_shortest_from(occ, from, &targets)
}

/// Candidate lateral-step columns, smaller first.
fn turn_columns(col: usize, cols: usize) -> impl Iterator<Item = usize> {
    let left = (col > 1).then(|| col - 1);
    let right = (col < cols).then(|| col + 1);
    left.into_iter().chain(right)
}

fn front_cells(occ: &Occupancy) -> Vec<Cell> {
    (1..=occ.grid().cols)
        .map(|col| Cell::new(FRONT_ROW, col))
        .filter(|&c| occ.is_empty_cell(c))
        .collect()
}

/// Lexicographically smallest shortest path from `start` to any cell of
/// `targets`, moving through empty cells only; `start` itself is exempt.
/// Targets must be empty cells (or equal to `start`).
pub(crate) fn lex_shortest_from(
    occ: &Occupancy,
    start: Cell,
    targets: &[Cell],
) -> Option<Vec<Cell>> {
    if targets.contains(&start) {
        return Some(vec![start]);
    }
    let grid = occ.grid();
    let dist = distances_to(occ, targets);
    let best = grid
        .neighbors(start)
        .filter(|&nb| occ.is_empty_cell(nb))
        .filter_map(|nb| dist[grid.index(nb)])
        .min()?;
    let mut path = vec![start];
    let mut cur = start;
    let mut need = best;
    while need > 0 {
        let next = grid
            .neighbors(cur)
            .filter(|&nb| occ.is_empty_cell(nb))
            .filter(|&nb| dist[grid.index(nb)] == Some(need))
            .min()
            .expect("distance field is consistent");
        path.push(next);
        cur = next;
        need -= 1;
    }
    Some(path)
}

/// Lexicographically smallest shortest store path from the front row to
/// `dest` (which must be empty), through empty cells.
fn lex_shortest_to_cell_from_front(occ: &Occupancy, dest: Cell) -> Option<Vec<Cell>> {
    let grid = occ.grid();
    let dist = distances_to(occ, &[dest]);
    let start = front_cells(occ)
        .into_iter()
        .filter_map(|c| dist[grid.index(c)].map(|d| (d, c)))
        .min()?;
    let (total, first) = start;
    let mut path = vec![first];
    let mut cur = first;
    let mut need = total;
    while need > 1 {
        need -= 1;
        let next = grid
            .neighbors(cur)
            .filter(|&nb| occ.is_empty_cell(nb))
            .filter(|&nb| dist[grid.index(nb)] == Some(need))
            .min()
            .expect("distance field is consistent");
        path.push(next);
        cur = next;
    }
    Some(path)
}

/// BFS distance (in cells, targets at 1) from every empty cell to the nearest
/// target, moving through empty cells.
fn distances_to(occ: &Occupancy, targets: &[Cell]) -> Vec<Option<usize>> {
    let grid = occ.grid();
    let mut dist: Vec<Option<usize>> = vec![None; grid.cell_count()];
    let mut queue = std::collections::VecDeque::new();
    for &t in targets {
        if occ.is_empty_cell(t) && dist[grid.index(t)].is_none() {
            dist[grid.index(t)] = Some(1);
            queue.push_back(t);
        }
    }
    while let Some(cell) = queue.pop_front() {
        let d = dist[grid.index(cell)].expect("queued");
        for nb in grid.neighbors(cell) {
            if occ.is_empty_cell(nb) && dist[grid.index(nb)].is_none() {
                dist[grid.index(nb)] = Some(d + 1);
                queue.push_back(nb);
            }
        }
    }
    dist
}

/// Retrieval path that first minimizes the number of blocking loads along it
/// and then its length. Returns the path and the blockers in path order.
pub(crate) fn min_blocker_retrieval_path(
    occ: &Occupancy,
    from: Cell,
) -> Option<(Vec<Cell>, Vec<Cell>)> {
    let grid = occ.grid();
    let mut best: Vec<Option<(usize, usize)>> = vec![None; grid.cell_count()];
    let mut parent: Vec<Option<Cell>> = vec![None; grid.cell_count()];
    let mut heap = BinaryHeap::new();
    best[grid.index(from)] = Some((0, 1));
    heap.push(Reverse((0usize, 1usize, from)));
    while let Some(Reverse((blockers, len, cell))) = heap.pop() {
        if best[grid.index(cell)] != Some((blockers, len)) {
            continue;
        }
        if cell.is_front() {
            let mut path = vec![cell];
            let mut cur = cell;
            while let Some(p) = parent[grid.index(cur)] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            let blockers = path[1..]
                .iter()
                .copied()
                .filter(|&c| occ.load_at(c).is_some())
                .collect();
            return Some((path, blockers));
        }
        for nb in grid.neighbors(cell) {
            let cost = (
                blockers + usize::from(occ.load_at(nb).is_some()),
                len + 1,
            );
            let idx = grid.index(nb);
            if best[idx].map_or(true, |b| cost < b) {
                best[idx] = Some(cost);
                parent[idx] = Some(cell);
                heap.push(Reverse((cost.0, cost.1, nb)));
            }
        }
    }
    None
}
