//! Plan replay against collision-free path semantics, plus the structural
//! checks (local adjacency, reversal, depth) that planner correctness rests on.

use std::collections::VecDeque;

use thiserror::Error;

use crate::action::{Action, ActionKind, Metrics, Plan};
use crate::grid::{Arrangement, Cell, GridSpec, Instance, Load};
use crate::occupancy::{Occupancy, Violation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExecError {
    #[error("action {index} is invalid: {violation}")]
    Action { index: usize, violation: Violation },
    #[error("action {index} breaks the prescribed order: expected load {expected}, got {got}")]
    OrderViolation {
        index: usize,
        expected: Load,
        got: Load,
    },
    #[error("action {index} stores a load after the retrieval phase began")]
    PhaseViolation { index: usize },
    #[error("action {index} moves load {load} that is not part of the instance")]
    UnknownLoad { index: usize, load: Load },
    #[error("action {index}: a temporarily removed load must be stored back, not {kind:?}")]
    TemporaryMismatch { index: usize, kind: ActionKind },
    #[error("plan does not store and retrieve every load exactly once")]
    IncompletePlan,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("sequence loads do not match the arrangement's loads")]
pub struct LabelMismatch;

/// Replay `plan` from the empty workspace and verify it solves `instance`:
/// non-temporary stores follow the arrival order, non-temporary retrieves
/// follow the departure order, every load is stored and retrieved exactly
/// once, and every action traverses empty in-bounds cells only.
pub fn execute_plan(instance: &Instance, plan: &Plan) -> Result<Metrics, ExecError> {
    if plan.is_empty() {
        return Err(ExecError::IncompletePlan);
    }
    let n = instance.n();
    let mut occ = Occupancy::new(instance.grid);
    let mut stored = vec![false; n];
    let mut retrieved = vec![false; n];
    let mut temporarily_out = vec![false; n];
    let mut next_store = 0usize;
    let mut next_retrieve = 0usize;
    let mut actions_per_load = vec![0usize; n];
    let mut metrics = Metrics::default();
    let mut last_real_store = None;

    for (index, action) in plan.actions.iter().enumerate() {
        if action.load == 0 || action.load > n {
            return Err(ExecError::UnknownLoad {
                index,
                load: action.load,
            });
        }
        let li = action.load - 1;

        match (action.kind, action.temporary) {
            (ActionKind::Store, false) => {
                if temporarily_out[li] {
                    return Err(ExecError::TemporaryMismatch {
                        index,
                        kind: action.kind,
                    });
                }
                if next_retrieve > 0 {
                    return Err(ExecError::PhaseViolation { index });
                }
                let expected = instance.arrival[next_store];
                if action.load != expected {
                    return Err(ExecError::OrderViolation {
                        index,
                        expected,
                        got: action.load,
                    });
                }
                next_store += 1;
                stored[li] = true;
                last_real_store = Some(index);
            }
            (ActionKind::Retrieve, false) => {
                if temporarily_out[li] {
                    return Err(ExecError::TemporaryMismatch {
                        index,
                        kind: action.kind,
                    });
                }
                let expected = *instance
                    .departure
                    .get(next_retrieve)
                    .ok_or(ExecError::IncompletePlan)?;
                if action.load != expected {
                    return Err(ExecError::OrderViolation {
                        index,
                        expected,
                        got: action.load,
                    });
                }
                next_retrieve += 1;
                retrieved[li] = true;
            }
            (ActionKind::Retrieve, true) => {
                temporarily_out[li] = true;
                metrics.temporary_moves += 1;
            }
            (ActionKind::Store, true) => {
                if !temporarily_out[li] {
                    return Err(ExecError::TemporaryMismatch {
                        index,
                        kind: action.kind,
                    });
                }
                temporarily_out[li] = false;
                metrics.temporary_moves += 1;
            }
            (ActionKind::Relocate, _) => {}
        }

        occ.apply_action(action)
            .map_err(|violation| ExecError::Action { index, violation })?;

        actions_per_load[li] += 1;
        metrics.total_actions += 1;
        metrics.total_distance += action.distance();
        match action.kind {
            ActionKind::Store => {
                metrics.stores += 1;
                metrics.store_distance += action.distance();
            }
            ActionKind::Retrieve => {
                metrics.retrieves += 1;
                metrics.retrieve_distance += action.distance();
            }
            ActionKind::Relocate => {
                metrics.relocations += 1;
                metrics.relocate_distance += action.distance();
            }
        }
    }

    if next_store != n
        || next_retrieve != n
        || occ.load_count() != 0
        || stored.iter().any(|s| !s)
        || retrieved.iter().any(|r| !r)
    {
        return Err(ExecError::IncompletePlan);
    }

    metrics.max_actions_per_load = actions_per_load.iter().copied().max().unwrap_or(0);
    metrics.retrieval_phase_actions = match last_real_store {
        Some(i) => plan.len() - i - 1,
        None => plan.len(),
    };
    Ok(metrics)
}

/// Local adjacency condition: `seq` can be retrieved from `arrangement` one
/// action per load iff every load is in the front row or 4-adjacent to a load
/// that departs earlier.
pub fn satisfies_departure(arrangement: &Arrangement, seq: &[Load]) -> Result<bool, LabelMismatch> {
    if seq.len() != arrangement.len() {
        return Err(LabelMismatch);
    }
    let mut order = std::collections::BTreeMap::new();
    for (i, &load) in seq.iter().enumerate() {
        if arrangement.cell_of(load).is_none() || order.insert(load, i).is_some() {
            return Err(LabelMismatch);
        }
    }
    for (i, &load) in seq.iter().enumerate() {
        let cell = arrangement.cell_of(load).expect("checked");
        if cell.is_front() {
            continue;
        }
        let ok = arrangement.iter().any(|(other, other_cell)| {
            other != load && other_cell.is_adjacent(cell) && order[&other] < i
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reverse a sequence; recasts storage satisfaction of an arrival order as
/// retrieval satisfaction of the reversed order.
pub fn reverse_sequence(seq: &[Load]) -> Vec<Load> {
    seq.iter().rev().copied().collect()
}

/// Depth of an arrangement: 1 plus the maximum over loads of the minimum
/// number of occupied cells (excluding the load itself) on any 4-connected
/// path from the load's cell to the front row. Empty arrangement has depth 0.
pub fn compute_depth(grid: &GridSpec, arrangement: &Arrangement) -> usize {
    if arrangement.is_empty() {
        return 0;
    }
    let occ = Occupancy::from_arrangement(*grid, arrangement);
    let max_blockers = arrangement
        .iter()
        .map(|(_, cell)| min_blockers_to_front(&occ, cell))
        .max()
        .unwrap_or(0);
    1 + max_blockers
}

/// 0/1-cost shortest path from `start` to any front-row cell, where entering
/// an occupied cell costs 1.
fn min_blockers_to_front(occ: &Occupancy, start: Cell) -> usize {
    let grid = occ.grid();
    let mut dist = vec![usize::MAX; grid.cell_count()];
    let mut deque = VecDeque::new();
    dist[grid.index(start)] = 0;
    deque.push_back(start);
    let mut best = if start.is_front() { 0 } else { usize::MAX };
    while let Some(cell) = deque.pop_front() {
        let d = dist[grid.index(cell)];
        if d >= best {
            continue;
        }
        for next in grid.neighbors(cell) {
            let cost = usize::from(occ.load_at(next).is_some());
            let idx = grid.index(next);
            if d + cost < dist[idx] {
                dist[idx] = d + cost;
                if next.is_front() {
                    best = best.min(d + cost);
                }
                if cost == 0 {
                    deque.push_front(next);
                } else {
                    deque.push_back(next);
                }
            }
        }
    }
    best
}
