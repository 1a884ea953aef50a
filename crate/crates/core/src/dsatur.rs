//! Exact DSATUR backtracking for the fixed-k coloring decision problem.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::graph::{verdict, ColorAssignment, Graph};

/// Uniform return contract for every solver in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A complete proper coloring with at most `k` colors.
    Sat(ColorAssignment),
    /// Certified: no proper `k`-coloring exists.
    Unsat,
    Timeout,
    Failure(String),
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat(_))
    }
}

/// Partial coloring plus the bookkeeping DSATUR needs: per-vertex counts of
/// each neighbor color, saturation degrees, and the assignment stack.
#[derive(Debug, Clone)]
pub struct SaturationState {
    k: usize,
    colors: Vec<u32>,
    /// `neighbor_colors[v * (k + 1) + c]` = colored neighbors of `v` with color `c`.
    neighbor_colors: Vec<u32>,
    saturation: Vec<usize>,
    stack: Vec<usize>,
}

impl SaturationState {
    pub fn new(graph: &Graph, k: u32) -> Self {
        let n = graph.vertex_count();
        let k = k as usize;
        Self {
            k,
            colors: vec![0; n],
            neighbor_colors: vec![0; n * (k + 1)],
            saturation: vec![0; n],
            stack: Vec::with_capacity(n),
        }
    }

    pub fn color(&self, v: usize) -> Option<u32> {
        Some(self.colors[v]).filter(|&c| c != 0)
    }

    /// Number of distinct colors among the colored neighbors of `v`.
    pub fn saturation(&self, v: usize) -> usize {
        self.saturation[v]
    }

    pub fn depth(&self) -> usize {
        self.stack.len()
    }

    /// Whether `color` is absent from the neighborhood of `v`.
    pub fn is_free(&self, v: usize, color: u32) -> bool {
        self.neighbor_colors[v * (self.k + 1) + color as usize] == 0
    }

    /// Colors uncolored vertex `v` with `color` (1..=k) and pushes it on the stack.
    pub fn assign(&mut self, graph: &Graph, v: usize, color: u32) {
        debug_assert!(self.colors[v] == 0 && color >= 1 && color as usize <= self.k);
        self.colors[v] = color;
        self.stack.push(v);
        let stride = self.k + 1;
        for &u in graph.neighbors(v) {
            let slot = &mut self.neighbor_colors[u * stride + color as usize];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    /// Pops the most recent assignment.
    pub fn undo(&mut self, graph: &Graph) -> Option<usize> {
        let v = self.stack.pop()?;
        let color = core::mem::take(&mut self.colors[v]);
        let stride = self.k + 1;
        for &u in graph.neighbors(v) {
            let slot = &mut self.neighbor_colors[u * stride + color as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
        Some(v)
    }

    pub fn to_assignment(&self, graph: &Graph) -> ColorAssignment {
        ColorAssignment::from_indexed(graph, &self.colors)
    }
}

/// The uncolored vertex with maximum saturation, then maximum degree, then
/// earliest position in the graph's vertex order. `None` once all are colored.
pub fn select_vertex(state: &SaturationState, graph: &Graph) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..graph.vertex_count() {
        if state.colors[v] != 0 {
            continue;
        }
        let key = (state.saturation[v], graph.degree(v));
        match best {
            Some((s, d, _)) if (s, d) >= key => {}
            _ => best = Some((key.0, key.1, v)),
        }
    }
    best.map(|(_, _, v)| v)
}

enum Search {
    Found,
    Exhausted,
    Timeout,
}

struct Solver<'a, B: ?Sized> {
    graph: &'a Graph,
    budget: &'a B,
    state: SaturationState,
    k: u32,
}

impl<B: Budget + ?Sized> Solver<'_, B> {
    fn search(&mut self, max_used: u32) -> Search {
        if self.budget.expired() {
            return Search::Timeout;
        }
        let Some(v) = select_vertex(&self.state, self.graph) else {
            return Search::Found;
        };
        // Colors above max_used + 1 are interchangeable with max_used + 1.
        let limit = self.k.min(max_used + 1);
        for color in 1..=limit {
            if !self.state.is_free(v, color) {
                continue;
            }
            self.state.assign(self.graph, v, color);
            match self.search(max_used.max(color)) {
                Search::Exhausted => {}
                other => return other,
            }
            self.state.undo(self.graph);
        }
        Search::Exhausted
    }
}

/// Decides whether `graph` has a proper coloring with at most `k` colors.
///
/// Colors are tried in increasing order at every node and the vertex order is
/// re-evaluated dynamically, so the result (including the returned coloring)
/// is deterministic. The budget is polled at every search node.
pub fn solve_decision<B: Budget + ?Sized>(graph: &Graph, k: u32, budget: &B) -> SolveOutcome {
    if k == 0 {
        return if graph.vertex_count() == 0 { SolveOutcome::Sat(ColorAssignment::new()) } else { SolveOutcome::Unsat };
    }
    let mut solver = Solver { graph, budget, state: SaturationState::new(graph, k), k };
    match solver.search(0) {
        Search::Found => {
            let assignment = solver.state.to_assignment(graph);
            match verdict(graph, &assignment, k) {
                Ok(v) if v.valid => SolveOutcome::Sat(assignment),
                _ => SolveOutcome::Failure("solver produced an invalid coloring".into()),
            }
        }
        Search::Exhausted => SolveOutcome::Unsat,
        Search::Timeout => SolveOutcome::Timeout,
    }
}

/// Timed out before the chromatic number was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("chromatic number computation timed out")]
pub struct ChromaticTimeout;

/// Smallest `k` with a proper `k`-coloring, found by trying k = 1, 2, …
/// under one shared budget. The empty graph has chromatic number 0.
pub fn chromatic_number<B: Budget + ?Sized>(graph: &Graph, budget: &B) -> Result<u32, ChromaticTimeout> {
    if graph.vertex_count() == 0 {
        return Ok(0);
    }
    for k in 1..=graph.vertex_count() as u32 {
        match solve_decision(graph, k, budget) {
            SolveOutcome::Sat(_) => return Ok(k),
            SolveOutcome::Unsat => {}
            SolveOutcome::Timeout | SolveOutcome::Failure(_) => return Err(ChromaticTimeout),
        }
    }
    unreachable!("every graph on n vertices is n-colorable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeLimit, Unlimited};
    use crate::graph::fixtures::*;
    use crate::graph::{parse_dimacs, verdict};

    /// Brute-force k-colorability over all k^n assignments.
    pub(crate) fn brute_force_colorable(graph: &Graph, k: u32) -> bool {
        let n = graph.vertex_count();
        if n == 0 {
            return true;
        }
        let mut colors = vec![0u32; n];
        loop {
            if graph.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::numbered(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn select_prefers_earlier_label_on_full_tie() {
        let g = complete(3);
        let mut s = SaturationState::new(&g, 3);
        s.assign(&g, 0, 1);
        assert_eq!(select_vertex(&s, &g), Some(1));
    }

    #[test]
    fn select_prefers_saturation() {
        let g = parse_dimacs("p edge 3 2\ne A B\ne B C").unwrap();
        let mut s = SaturationState::new(&g, 2);
        s.assign(&g, 0, 1);
        assert_eq!(select_vertex(&s, &g), Some(1));
        // C has degree 1 like A, and saturation 0
        assert_eq!(s.saturation(2), 0);
        assert_eq!(s.saturation(1), 1);
    }

    #[test]
    fn select_fresh_picks_max_degree() {
        let g = fig2();
        let s = SaturationState::new(&g, 3);
        assert_eq!(select_vertex(&s, &g), Some(2));
    }

    #[test]
    fn select_none_when_colored() {
        let g = complete(2);
        let mut s = SaturationState::new(&g, 2);
        s.assign(&g, 0, 1);
        s.assign(&g, 1, 2);
        assert_eq!(select_vertex(&s, &g), None);
    }

    #[test]
    fn saturation_tracks_assign_and_undo() {
        let g = fig2();
        let mut s = SaturationState::new(&g, 3);
        s.assign(&g, 0, 1);
        s.assign(&g, 1, 2);
        assert_eq!(s.saturation(2), 2);
        assert_eq!(s.depth(), 2);
        s.undo(&g);
        assert_eq!(s.saturation(2), 1);
        assert_eq!(s.depth(), 1);
        assert!(!s.is_free(2, 1));
        assert!(s.is_free(2, 2));
    }

    #[test]
    fn triangle_not_two_colorable() {
        assert_eq!(solve_decision(&complete(3), 2, &Unlimited), SolveOutcome::Unsat);
        assert_eq!(solve_decision(&fig2(), 2, &Unlimited), SolveOutcome::Unsat);
        assert!(!brute_force_colorable(&fig2(), 2));
    }

    #[test]
    fn five_cycle_three_colorable() {
        let g = cycle(5);
        assert!(brute_force_colorable(&g, 3));
        match solve_decision(&g, 3, &Unlimited) {
            SolveOutcome::Sat(a) => assert!(verdict(&g, &a, 3).unwrap().valid),
            other => panic!("expected Sat, got {other:?}"),
        }
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(4), &Unlimited), Ok(4));
        let star = Graph::numbered(6, (1..6).map(|i| (0, i))).unwrap();
        assert_eq!(chromatic_number(&star, &Unlimited), Ok(2));
        let p = petersen();
        assert!(!brute_force_colorable(&p, 2));
        assert!(brute_force_colorable(&p, 3));
        assert_eq!(chromatic_number(&p, &Unlimited), Ok(3));
        assert_eq!(chromatic_number(&Graph::numbered(0, []).unwrap(), &Unlimited), Ok(0));
    }

    #[test]
    fn timeout_when_budget_exhausted() {
        assert_eq!(solve_decision(&petersen(), 3, &NodeLimit::new(0)), SolveOutcome::Timeout);
        assert_eq!(chromatic_number(&petersen(), &NodeLimit::new(3)), Err(ChromaticTimeout));
    }

    #[test]
    fn zero_colors() {
        assert_eq!(solve_decision(&complete(1), 0, &Unlimited), SolveOutcome::Unsat);
        assert!(solve_decision(&Graph::numbered(0, []).unwrap(), 0, &Unlimited).is_sat());
    }

    #[test]
    fn deterministic() {
        let g = petersen();
        assert_eq!(solve_decision(&g, 3, &Unlimited), solve_decision(&g, 3, &Unlimited));
    }
}
