//! Rearrangement-free planning with full knowledge of both sequences.
//!
//! Loads are relabeled internally by departure rank so the departure order is
//! the identity. All but the last three used columns are filled one column at
//! a time with the next `r` arrivals sorted by rank; the remaining loads go
//! into three adjacent columns via a two-sequence interleaving assignment
//! that satisfies the local adjacency condition for the departure order and
//! for the reversed arrival order at once. The resulting arrangement converts
//! into a plan of exactly `2n` actions with no relocations.

use thiserror::Error;

use crate::action::{Action, Plan};
use crate::executor::{reverse_sequence, satisfies_departure};
use crate::grid::{Arrangement, Cell, GridSpec, Instance, Load};
use crate::lookahead;
use crate::occupancy::Occupancy;
use crate::oracle;
use crate::paths::{retrieve_path, store_path};
use crate::stream::ArrivalStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Storage,
    Retrieval,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OfflineError {
    #[error("zero-relocation planning requires at least 3 columns, grid has {cols}")]
    NarrowGrid { cols: usize },
    #[error("{n} loads exceed the {cells}-cell grid capacity")]
    TooManyLoads { n: usize, cells: usize },
    #[error("column heights {h1},{h2},{h3} do not fit {n} loads in {rows} rows")]
    InvalidHeights {
        h1: usize,
        h2: usize,
        h3: usize,
        n: usize,
        rows: usize,
    },
    #[error("assignment overflowed the height of column {column}")]
    HeightOverflow { column: usize },
    #[error("input is not a permutation")]
    NotPermutation,
    #[error("arrangement misses a placement for load {load}")]
    MissingPlacement { load: Load },
    #[error("no valid path for load {load} during {phase:?}")]
    NoPath { load: Load, phase: Phase },
    #[error("stream lookahead {have} is too small, {needed} is required here")]
    InsufficientLookahead { needed: usize, have: usize },
    #[error("no satisfying completion found for the final {m} loads")]
    InfeasibleCompletion { m: usize },
}

/// Target fill heights of the three final columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnHeights {
    pub h1: usize,
    pub h2: usize,
    pub h3: usize,
}

impl ColumnHeights {
    /// Heights for `m` loads in `rows`-tall columns: the two left columns get
    /// `ceil(m/3)` (capped at `rows`, trimmed for tiny `m`), the third the
    /// remainder.
    pub fn for_load_count(m: usize, rows: usize) -> Self {
        let h1 = ((m + 2) / 3).min(rows);
        let h2 = h1.min(m - h1);
        ColumnHeights {
            h1,
            h2,
            h3: m - h1 - h2,
        }
    }

    pub fn total(&self) -> usize {
        self.h1 + self.h2 + self.h3
    }
}

/// Build an arrangement of loads `1..=n` on the first three columns of an
/// `rows x 3` area that satisfies the identity departure order and `d_prime`
/// simultaneously, when the chosen heights admit one.
///
/// Stage 1 walks both sequences: unequal heads go to the lowest unassigned
/// cells of columns 1 and 2, an equal head goes to column 3. When columns 1
/// and 2 reach their heights, column 3 takes the rest of the identity order
/// (case 1); when column 3 fills first, column 2 takes the rest of `d_prime`
/// and column 1 the rest of the identity order (case 2).
pub fn algorithm1_three_columns(
    d_prime: &[Load],
    rows: usize,
    heights: ColumnHeights,
) -> Result<Arrangement, OfflineError> {
    let n = d_prime.len();
    if !crate::grid::is_permutation(d_prime) {
        return Err(OfflineError::NotPermutation);
    }
    if heights.total() != n || heights.h1 > rows || heights.h2 > rows || heights.h3 > rows {
        return Err(OfflineError::InvalidHeights {
            h1: heights.h1,
            h2: heights.h2,
            h3: heights.h3,
            n,
            rows,
        });
    }

    let mut cell_of: Vec<Option<Cell>> = vec![None; n];
    let mut fill = [0usize; 3];
    let mut assign = |load: Load, column: usize, fill: &mut [usize; 3]| {
        fill[column - 1] += 1;
        cell_of[load - 1] = Some(Cell::new(fill[column - 1], column));
    };

    let mut px = 0usize; // scan over the identity order
    let mut py = 0usize; // scan over d_prime
    loop {
        if fill[0] == heights.h1 && fill[1] == heights.h2 {
            // Case 1: top off column 3 with the rest of the identity order.
            for load in 1..=n {
                if cell_of[load - 1].is_none() {
                    if fill[2] == heights.h3 {
                        return Err(OfflineError::HeightOverflow { column: 3 });
                    }
                    assign(load, 3, &mut fill);
                }
            }
            break;
        }
        if fill[2] == heights.h3 {
            // Case 2: column 2 takes the rest of d_prime, column 1 the rest
            // of the identity order.
            for &load in &d_prime[py..] {
                if fill[1] == heights.h2 {
                    break;
                }
                if cell_of[load - 1].is_none() {
                    assign(load, 2, &mut fill);
                }
            }
            for load in 1..=n {
                if cell_of[load - 1].is_none() {
                    if fill[0] == heights.h1 {
                        return Err(OfflineError::HeightOverflow { column: 1 });
                    }
                    assign(load, 1, &mut fill);
                }
            }
            break;
        }

        while cell_of[px].is_some() {
            px += 1;
        }
        while cell_of[d_prime[py] - 1].is_some() {
            py += 1;
        }
        let x = px + 1;
        let y = d_prime[py];
        if x != y {
            if fill[0] == heights.h1 || fill[1] == heights.h2 {
                let column = if fill[0] == heights.h1 { 1 } else { 2 };
                return Err(OfflineError::HeightOverflow { column });
            }
            assign(x, 1, &mut fill);
            assign(y, 2, &mut fill);
        } else {
            assign(x, 3, &mut fill);
        }
    }

    Ok(cell_of
        .iter()
        .enumerate()
        .map(|(i, c)| (i + 1, c.expect("all loads assigned")))
        .collect())
}

/// Departure ranks and label translation for an instance.
pub(crate) struct RankedInstance {
    pub grid: GridSpec,
    pub n: usize,
    /// `rank_of[load-1]` = 1-based departure rank.
    pub rank_of: Vec<usize>,
    /// `label_of[rank-1]` = external label.
    pub label_of: Vec<Load>,
}

impl RankedInstance {
    pub fn new(instance: &Instance) -> Self {
        RankedInstance {
            grid: instance.grid,
            n: instance.n(),
            rank_of: instance.departure_ranks(),
            label_of: instance.departure.clone(),
        }
    }
}

pub(crate) struct AssignOutcome {
    /// Cell per departure rank (index `rank - 1`). Final-columns entries are
    /// `None` when the height completion overflowed.
    pub cell_of_rank: Vec<Option<Cell>>,
    /// Whether the final-columns assignment passed the local adjacency check
    /// for both sequences.
    pub verified: bool,
    /// Number of fully pre-filled columns.
    pub prefix_columns: usize,
    /// Departure ranks of the final-columns loads, ascending.
    pub tail_ranks: Vec<usize>,
    /// Reversed arrival order of the final loads, as local ids `1..=m`.
    pub d_prime_local: Vec<usize>,
}

impl AssignOutcome {
    fn into_arrangement(self, ri: &RankedInstance) -> Arrangement {
        self.cell_of_rank
            .iter()
            .enumerate()
            .map(|(rank0, cell)| (ri.label_of[rank0], cell.expect("all ranks placed")))
            .collect()
    }
}

/// Column pre-fill plus the three-column assignment, reading arrivals through
/// `stream`. Consults at most `3r - 1` future arrivals at any point; the last
/// of a full window is deduced as the only unseen label.
pub(crate) fn assign_streamed(
    ri: &RankedInstance,
    stream: &mut ArrivalStream,
) -> Result<AssignOutcome, OfflineError> {
    let (rows, cols) = (ri.grid.rows, ri.grid.cols);
    if cols < 3 {
        return Err(OfflineError::NarrowGrid { cols });
    }
    if ri.n > ri.grid.cell_count() {
        return Err(OfflineError::TooManyLoads {
            n: ri.n,
            cells: ri.grid.cell_count(),
        });
    }

    let mut cell_of_rank: Vec<Option<Cell>> = vec![None; ri.n];
    let mut next_col = 1usize;
    while stream.remaining() > 3 * rows {
        if stream.lookahead() < rows {
            return Err(OfflineError::InsufficientLookahead {
                needed: rows,
                have: stream.lookahead(),
            });
        }
        let mut batch: Vec<usize> = (0..rows)
            .map(|i| ri.rank_of[stream.peek(i).expect("within window") - 1])
            .collect();
        batch.sort_unstable();
        for (i, &rank) in batch.iter().enumerate() {
            cell_of_rank[rank - 1] = Some(Cell::new(i + 1, next_col));
        }
        for _ in 0..rows {
            stream.next_arrival();
        }
        next_col += 1;
    }

    // Collect the final loads; with a full 3r-1 window the last arrival is
    // deduced as the only label not yet seen.
    let m = stream.remaining();
    let mut tail: Vec<Load> = Vec::with_capacity(m);
    if m <= stream.lookahead() {
        for i in 0..m {
            tail.push(stream.peek(i).expect("within window"));
        }
    } else if m == stream.lookahead() + 1 {
        let mut seen = vec![false; ri.n];
        for &l in stream.consumed() {
            seen[l - 1] = true;
        }
        for i in 0..stream.lookahead() {
            let l = stream.peek(i).expect("within window");
            seen[l - 1] = true;
            tail.push(l);
        }
        let missing = (1..=ri.n).find(|&l| !seen[l - 1]).expect("one unseen load");
        tail.push(missing);
    } else {
        return Err(OfflineError::InsufficientLookahead {
            needed: m.saturating_sub(1),
            have: stream.lookahead(),
        });
    }
    for _ in 0..m {
        stream.next_arrival();
    }

    // Relabel the final loads 1..=m by departure rank.
    let mut tail_ranks: Vec<usize> = tail.iter().map(|&l| ri.rank_of[l - 1]).collect();
    tail_ranks.sort_unstable();
    let local_of_rank = |rank: usize| tail_ranks.binary_search(&rank).expect("tail rank") + 1;
    let d_prime_local: Vec<usize> = tail
        .iter()
        .rev()
        .map(|&l| local_of_rank(ri.rank_of[l - 1]))
        .collect();

    let heights = ColumnHeights::for_load_count(m, rows);
    let mut verified = false;
    if let Ok(local) = algorithm1_three_columns(&d_prime_local, rows, heights) {
        verified = triple_satisfies(&local, &d_prime_local);
        for (local_id, cell) in local.iter() {
            cell_of_rank[tail_ranks[local_id - 1] - 1] =
                Some(Cell::new(cell.row, cell.col + next_col - 1));
        }
    }

    Ok(AssignOutcome {
        cell_of_rank,
        verified,
        prefix_columns: next_col - 1,
        tail_ranks,
        d_prime_local,
    })
}

fn triple_satisfies(local: &Arrangement, d_prime_local: &[usize]) -> bool {
    let identity: Vec<usize> = (1..=d_prime_local.len()).collect();
    satisfies_departure(local, &identity).unwrap_or(false)
        && satisfies_departure(local, d_prime_local).unwrap_or(false)
}

/// Arrangement for `instance` that satisfies the departure order and the
/// reversed arrival order, enabling a zero-relocation plan.
pub fn assign_offline_arrangement(instance: &Instance) -> Result<Arrangement, OfflineError> {
    let ri = RankedInstance::new(instance);
    let window = effective_window(instance);
    let mut stream = ArrivalStream::new(instance.arrival.clone(), window);
    let outcome = assign_streamed(&ri, &mut stream)?;
    let outcome = if outcome.verified {
        outcome
    } else {
        rescue_with_oracle(&ri, outcome)?
    };
    Ok(outcome
        .cell_of_rank
        .iter()
        .enumerate()
        .map(|(rank0, &cell)| (ri.label_of[rank0], cell))
        .collect())
}

/// Re-solve the final three columns by exhaustive search when the height
/// completion fails the adjacency check (only possible below full capacity).
fn rescue_with_oracle(
    ri: &RankedInstance,
    mut outcome: AssignOutcome,
) -> Result<AssignOutcome, OfflineError> {
    let m = outcome.tail_ranks.len();
    let sub_grid = GridSpec::new(ri.grid.rows, 3).expect("valid");
    let arrival_local = reverse_sequence(&outcome.d_prime_local);
    let sub_instance = Instance::with_identity_departure(sub_grid, arrival_local)
        .expect("valid subinstance");
    let result = oracle::brute_force_feasible(&sub_instance)
        .map_err(|_| OfflineError::InfeasibleCompletion { m })?;
    let witness = result
        .witness
        .ok_or(OfflineError::InfeasibleCompletion { m })?;
    for (local_id, cell) in witness.iter() {
        outcome.cell_of_rank[outcome.tail_ranks[local_id - 1] - 1] =
            Cell::new(cell.row, cell.col + outcome.prefix_columns);
    }
    outcome.verified = true;
    Ok(outcome)
}

/// Simulate storage in arrival order and retrieval in departure order against
/// `arrangement`, choosing deterministic column-adjacent paths where they
/// exist. Fails with `NoPath` if the arrangement does not satisfy a sequence.
pub fn plan_from_arrangement(
    instance: &Instance,
    arrangement: &Arrangement,
) -> Result<Plan, OfflineError> {
    let mut occ = Occupancy::new(instance.grid);
    let mut actions = Vec::with_capacity(2 * instance.n());
    for &load in &instance.arrival {
        let dest = arrangement
            .cell_of(load)
            .ok_or(OfflineError::MissingPlacement { load })?;
        let path = store_path(&occ, dest).ok_or(OfflineError::NoPath {
            load,
            phase: Phase::Storage,
        })?;
        let action = Action::store(load, path);
        occ.apply_action(&action).expect("constructed path is valid");
        actions.push(action);
    }
    for &load in &instance.departure {
        let from = occ.position(load).ok_or(OfflineError::MissingPlacement { load })?;
        let path = retrieve_path(&occ, from).ok_or(OfflineError::NoPath {
            load,
            phase: Phase::Retrieval,
        })?;
        let action = Action::retrieve(load, path);
        occ.apply_action(&action).expect("constructed path is valid");
        actions.push(action);
    }
    Ok(Plan::new(actions))
}

fn effective_window(instance: &Instance) -> usize {
    (3 * instance.grid.rows - 1).min(instance.n()).max(1)
}

/// Zero-relocation plan for a fully known instance on a grid with at least
/// three columns: exactly `2n` actions, no relocations.
pub fn plan_offline(instance: &Instance) -> Result<Plan, OfflineError> {
    let mut stream = ArrivalStream::new(instance.arrival.clone(), effective_window(instance));
    plan_streamed(instance, &mut stream)
}

/// Shared core of the offline planner and its bounded-lookahead twin.
pub(crate) fn plan_streamed(
    instance: &Instance,
    stream: &mut ArrivalStream,
) -> Result<Plan, OfflineError> {
    let ri = RankedInstance::new(instance);
    let outcome = assign_streamed(&ri, stream)?;
    if !outcome.verified {
        // Height completion failed below full capacity. Prefer the sparse
        // single-lookahead strategy when it applies, else re-solve the final
        // columns exhaustively.
        let sparse_limit = instance.grid.rows * (instance.grid.cols - 1) + 1;
        if instance.n() <= sparse_limit {
            let mut sparse_stream = ArrivalStream::new(instance.arrival.clone(), 1);
            if let Ok(plan) = lookahead::plan_sparse_lookahead1(&mut sparse_stream, instance) {
                return Ok(plan);
            }
        }
        let outcome = rescue_with_oracle(&ri, outcome)?;
        let arrangement: Arrangement = outcome
            .cell_of_rank
            .iter()
            .enumerate()
            .map(|(rank0, &cell)| (ri.label_of[rank0], cell))
            .collect();
        return plan_from_arrangement(instance, &arrangement);
    }
    let arrangement: Arrangement = outcome
        .cell_of_rank
        .iter()
        .enumerate()
        .map(|(rank0, &cell)| (ri.label_of[rank0], cell))
        .collect();
    plan_from_arrangement(instance, &arrangement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::is_column_adjacent;
    use crate::executor::execute_plan;
    use itertools::Itertools;

    fn column(arr: &Arrangement, col: usize, rows: usize) -> Vec<Load> {
        (1..=rows)
            .map(|row| arr.load_at(Cell::new(row, col)).expect("full column"))
            .collect()
    }

    /// First worked trace: unequal heads fill columns 1 and 2 until both are
    /// full, then column 3 takes the leftovers (case 1).
    #[test]
    fn three_column_trace_case_1() {
        let d_prime = vec![12, 7, 3, 1, 10, 8, 9, 11, 6, 4, 2, 5];
        let arr =
            algorithm1_three_columns(&d_prime, 4, ColumnHeights::for_load_count(12, 4)).unwrap();
        assert_eq!(column(&arr, 1, 4), vec![1, 2, 4, 5]);
        assert_eq!(column(&arr, 2, 4), vec![12, 7, 10, 8]);
        assert_eq!(column(&arr, 3, 4), vec![3, 6, 9, 11]);
        let identity: Vec<Load> = (1..=12).collect();
        assert_eq!(satisfies_departure(&arr, &identity), Ok(true));
        assert_eq!(satisfies_departure(&arr, &d_prime), Ok(true));
    }

    /// Second worked trace: column 3 fills first, then column 2 is completed
    /// with loads 10 and 12 from d_prime (case 2).
    #[test]
    fn three_column_trace_case_2() {
        let d_prime = vec![8, 3, 4, 5, 6, 2, 7, 12, 1, 10, 9, 11];
        let arr =
            algorithm1_three_columns(&d_prime, 4, ColumnHeights::for_load_count(12, 4)).unwrap();
        assert_eq!(column(&arr, 1, 4), vec![1, 2, 9, 11]);
        assert_eq!(column(&arr, 2, 4), vec![8, 3, 12, 10]);
        assert_eq!(column(&arr, 3, 4), vec![4, 5, 6, 7]);
        let identity: Vec<Load> = (1..=12).collect();
        assert_eq!(satisfies_departure(&arr, &identity), Ok(true));
        assert_eq!(satisfies_departure(&arr, &d_prime), Ok(true));
    }

    /// The identity d_prime forces every stage-1 head pair to be equal, so
    /// column 3 fills bottom-up first and case 2 finishes the other columns.
    #[test]
    fn three_column_identity_goes_through_case_2() {
        for r in 1..=5 {
            let n = 3 * r;
            let d_prime: Vec<Load> = (1..=n).collect();
            let arr = algorithm1_three_columns(&d_prime, r, ColumnHeights::for_load_count(n, r))
                .unwrap();
            assert_eq!(column(&arr, 3, r), (1..=r).collect::<Vec<_>>());
            assert_eq!(column(&arr, 2, r), (r + 1..=2 * r).collect::<Vec<_>>());
            assert_eq!(column(&arr, 1, r), (2 * r + 1..=3 * r).collect::<Vec<_>>());
        }
    }

    #[test]
    fn unbalanced_heights_overflow() {
        // Two unequal head pairs need two slots in each of columns 1 and 2.
        let d_prime = vec![3, 1, 2];
        let heights = ColumnHeights { h1: 2, h2: 1, h3: 0 };
        assert_eq!(
            algorithm1_three_columns(&d_prime, 3, heights),
            Err(OfflineError::HeightOverflow { column: 2 })
        );
    }

    #[test]
    fn heights_cover_small_and_capped_counts() {
        assert_eq!(
            ColumnHeights::for_load_count(1, 4),
            ColumnHeights { h1: 1, h2: 0, h3: 0 }
        );
        assert_eq!(
            ColumnHeights::for_load_count(2, 4),
            ColumnHeights { h1: 1, h2: 1, h3: 0 }
        );
        assert_eq!(
            ColumnHeights::for_load_count(12, 4),
            ColumnHeights { h1: 4, h2: 4, h3: 4 }
        );
        assert_eq!(
            ColumnHeights::for_load_count(11, 4),
            ColumnHeights { h1: 4, h2: 4, h3: 3 }
        );
    }

    /// 3x5 worked example: two pre-filled columns in departure order, then the
    /// three-column assignment for the last nine arrivals.
    #[test]
    fn offline_assignment_matches_the_3x5_trace() {
        let grid = GridSpec::new(3, 5).unwrap();
        let arrival = vec![4, 10, 6, 12, 2, 3, 9, 15, 1, 14, 13, 7, 5, 11, 8];
        let instance = Instance::with_identity_departure(grid, arrival).unwrap();
        let arr = assign_offline_arrangement(&instance).unwrap();
        assert_eq!(column(&arr, 1, 3), vec![4, 6, 10]);
        assert_eq!(column(&arr, 2, 3), vec![2, 3, 12]);
        assert_eq!(column(&arr, 3, 3), vec![1, 5, 9]);
        assert_eq!(column(&arr, 4, 3), vec![8, 11, 13]);
        assert_eq!(column(&arr, 5, 3), vec![7, 14, 15]);
        let identity: Vec<Load> = (1..=15).collect();
        assert_eq!(satisfies_departure(&arr, &identity), Ok(true));
        let d_prime = reverse_sequence(&instance.arrival);
        assert_eq!(satisfies_departure(&arr, &d_prime), Ok(true));
    }

    #[test]
    fn single_load_goes_to_the_front_left_cell() {
        for (r, c) in [(1, 3), (3, 3), (4, 7)] {
            let grid = GridSpec::new(r, c).unwrap();
            let instance = Instance::with_identity_departure(grid, vec![1]).unwrap();
            let arr = assign_offline_arrangement(&instance).unwrap();
            assert_eq!(arr.cell_of(1), Some(Cell::new(1, 1)));
        }
    }

    #[test]
    fn narrow_grids_are_rejected() {
        let grid = GridSpec::new(3, 2).unwrap();
        let instance = Instance::with_identity_departure(grid, vec![2, 1]).unwrap();
        assert_eq!(
            assign_offline_arrangement(&instance),
            Err(OfflineError::NarrowGrid { cols: 2 })
        );
    }

    /// The introductory 3x3 instance: 18 actions, zero relocations, every
    /// path column-adjacent.
    #[test]
    fn full_3x3_example_plans_without_relocations() {
        let grid = GridSpec::new(3, 3).unwrap();
        let instance =
            Instance::with_identity_departure(grid, vec![9, 4, 7, 3, 6, 2, 1, 8, 5]).unwrap();
        let plan = plan_offline(&instance).unwrap();
        assert_eq!(plan.len(), 18);
        assert_eq!(plan.relocation_count(), 0);
        assert!(plan.actions.iter().all(|a| is_column_adjacent(&a.path)));
        let metrics = execute_plan(&instance, &plan).unwrap();
        assert_eq!(metrics.stores, 9);
        assert_eq!(metrics.retrieves, 9);
        assert_eq!(metrics.relocations, 0);
    }

    #[test]
    fn plan_from_arrangement_on_a_single_front_load() {
        let grid = GridSpec::new(2, 3).unwrap();
        let instance = Instance::with_identity_departure(grid, vec![1]).unwrap();
        let arr = Arrangement::new(grid, [(1, Cell::new(1, 2))]).unwrap();
        let plan = plan_from_arrangement(&instance, &arr).unwrap();
        assert_eq!(plan.len(), 2);
        assert!(plan.actions.iter().all(|a| a.path.len() == 1));
        execute_plan(&instance, &plan).unwrap();
    }

    /// Every full-capacity arrival order on 2x3 plans with 2n actions, no
    /// relocations, and column-adjacent paths.
    #[test]
    fn exhaustive_2x3_full_capacity() {
        let grid = GridSpec::new(2, 3).unwrap();
        for perm in (1..=6).permutations(6) {
            let instance = Instance::with_identity_departure(grid, perm).unwrap();
            let plan = plan_offline(&instance).unwrap();
            assert_eq!(plan.len(), 12);
            assert_eq!(plan.relocation_count(), 0);
            assert!(plan.actions.iter().all(|a| is_column_adjacent(&a.path)));
            execute_plan(&instance, &plan).unwrap();
        }
    }

    /// Sub-capacity instances still plan with 2n actions and no relocations,
    /// through the verified completion or one of the fallbacks.
    #[test]
    fn subcapacity_instances_plan_clean() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (r, c) in [(3, 3), (4, 3), (2, 5), (4, 5)] {
            let grid = GridSpec::new(r, c).unwrap();
            for n in 1..=(r * c) {
                for _ in 0..20 {
                    let mut arrival: Vec<Load> = (1..=n).collect();
                    arrival.shuffle(&mut rng);
                    let instance = Instance::with_identity_departure(grid, arrival).unwrap();
                    let plan = plan_offline(&instance).unwrap();
                    assert_eq!(plan.len(), 2 * n);
                    assert_eq!(plan.relocation_count(), 0);
                    execute_plan(&instance, &plan).unwrap();
                }
            }
        }
    }
}
