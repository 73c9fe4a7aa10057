//! Instrumented arrival stream with a bounded lookahead window.

use crate::grid::Load;

/// Reveals an arrival sequence through a window of `lookahead` items.
///
/// `peek(0)` is the next arrival. Every successful peek is logged;
/// [`max_peek_depth`](Self::max_peek_depth) reports the deepest access so a
/// test can assert a planner honored its declared lookahead.
#[derive(Debug, Clone)]
pub struct ArrivalStream {
    seq: Vec<Load>,
    lookahead: usize,
    cursor: usize,
    max_peek: usize,
}

impl ArrivalStream {
    pub fn new(seq: impl Into<Vec<Load>>, lookahead: usize) -> Self {
        ArrivalStream {
            seq: seq.into(),
            lookahead,
            cursor: 0,
            max_peek: 0,
        }
    }

    pub fn lookahead(&self) -> usize {
        self.lookahead
    }

    /// Arrival `offset` positions past the cursor, or `None` beyond the
    /// window or the end of the sequence.
    pub fn peek(&mut self, offset: usize) -> Option<Load> {
        if offset >= self.lookahead {
            return None;
        }
        let load = self.seq.get(self.cursor + offset).copied()?;
        self.max_peek = self.max_peek.max(offset + 1);
        Some(load)
    }

    /// Consume and return the next arrival.
    pub fn next_arrival(&mut self) -> Option<Load> {
        let load = self.peek(0)?;
        self.cursor += 1;
        Some(load)
    }

    /// Loads that already arrived, in order.
    pub fn consumed(&self) -> &[Load] {
        &self.seq[..self.cursor]
    }

    pub fn remaining(&self) -> usize {
        self.seq.len() - self.cursor
    }

    /// Deepest peek performed so far (1 = next arrival only).
    pub fn max_peek_depth(&self) -> usize {
        self.max_peek
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peeks_are_bounded_by_the_window() {
        let mut s = ArrivalStream::new(vec![3, 1, 2], 2);
        assert_eq!(s.peek(0), Some(3));
        assert_eq!(s.peek(1), Some(1));
        assert_eq!(s.peek(2), None);
        assert_eq!(s.max_peek_depth(), 2);
    }

    #[test]
    fn advancing_shifts_the_window() {
        let mut s = ArrivalStream::new(vec![3, 1, 2], 1);
        assert_eq!(s.next_arrival(), Some(3));
        assert_eq!(s.peek(0), Some(1));
        assert_eq!(s.next_arrival(), Some(1));
        assert_eq!(s.next_arrival(), Some(2));
        assert_eq!(s.next_arrival(), None);
        assert_eq!(s.max_peek_depth(), 1);
        assert_eq!(s.consumed(), &[3, 1, 2]);
    }
}
