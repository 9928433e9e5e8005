//! Backtracking over pair adjacencies.
//!
//! Every pair of elements sharing a circuit is a variable that is adjacent, non-adjacent or
//! undecided. Each circuit of size at least 3 requires its adjacent pairs to form a
//! Hamiltonian cycle on the circuit; in theta mode each theta circuit `A ∪ B` of size at
//! least 4 additionally has exactly two adjacent pairs crossing between `A` and `B`.

use crate::matroid::Matroid;
use crate::ordering::{theta_restrictions, CyclicOrdering, OrderingAssignment};
use crate::set::ElemSet;

#[derive(Clone, Copy, Debug)]
enum Constraint {
    Cycle(ElemSet),
    Cross(ElemSet, ElemSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// The solution callback asked to stop.
    Stopped,
    /// The whole tree was explored.
    Exhausted,
    /// The node budget ran out.
    OutOfBudget,
}

pub(crate) struct Engine<'m> {
    m: &'m Matroid,
    n: usize,
    adj: Vec<u64>,
    non: Vec<u64>,
    trail: Vec<(u8, u8)>,
    constraints: Vec<Constraint>,
    /// Number of leading constraints that are cycles, in branching order.
    cycles: usize,
    watch: Vec<Vec<usize>>,
    queue: Vec<usize>,
    queued: Vec<bool>,
    pub nodes: u64,
    budget: u64,
}

impl<'m> Engine<'m> {
    pub fn new(m: &'m Matroid, theta: bool, budget: u64) -> Engine<'m> {
        let n = m.len();
        let mut cycles: Vec<ElemSet> = m.circuits().iter().copied().filter(|c| c.len() >= 3).collect();
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        let mut constraints: Vec<Constraint> = cycles.iter().map(|&c| Constraint::Cycle(c)).collect();
        let n_cycles = constraints.len();
        if theta {
            for t in theta_restrictions(m) {
                for (c, x, y) in t.circuits() {
                    if c.len() >= 4 {
                        constraints.push(Constraint::Cross(x, y));
                    }
                }
            }
        }
        let mut watch = vec![Vec::new(); n * n];
        for (i, con) in constraints.iter().enumerate() {
            match *con {
                Constraint::Cycle(c) => {
                    for e in c.iter() {
                        for f in c.iter().filter(|&f| f > e) {
                            watch[e * n + f].push(i);
                        }
                    }
                }
                Constraint::Cross(a, b) => {
                    for x in a.iter() {
                        for y in b.iter() {
                            watch[x.min(y) * n + x.max(y)].push(i);
                        }
                    }
                }
            }
        }
        let k = constraints.len();
        Engine {
            m,
            n,
            adj: vec![0; n],
            non: vec![0; n],
            trail: Vec::new(),
            constraints,
            cycles: n_cycles,
            watch,
            queue: Vec::new(),
            queued: vec![false; k],
            nodes: 0,
            budget,
        }
    }

    /// Circuits in branching order.
    pub fn circuit_order(&self) -> Vec<ElemSet> {
        self.constraints[..self.cycles]
            .iter()
            .map(|c| match c {
                Constraint::Cycle(c) => *c,
                Constraint::Cross(..) => unreachable!(),
            })
            .collect()
    }

    fn decided(&self, e: usize) -> u64 {
        self.adj[e] | self.non[e]
    }

    fn enqueue_pair(&mut self, e: usize, f: usize) {
        let (a, b) = (e.min(f), e.max(f));
        for k in 0..self.watch[a * self.n + b].len() {
            let i = self.watch[a * self.n + b][k];
            if !self.queued[i] {
                self.queued[i] = true;
                self.queue.push(i);
            }
        }
    }

    /// Decide a pair. Returns false if it was already decided the other way.
    fn assign(&mut self, e: usize, f: usize, adjacent: bool) -> bool {
        if self.decided(e) >> f & 1 == 1 {
            return (self.adj[e] >> f & 1 == 1) == adjacent;
        }
        let (bits, fb, eb) = (if adjacent { &mut self.adj } else { &mut self.non }, 1u64 << f, 1u64 << e);
        bits[e] |= fb;
        bits[f] |= eb;
        self.trail.push((e as u8, f as u8));
        self.enqueue_pair(e, f);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (e, f) = self.trail.pop().unwrap();
            let (e, f) = (e as usize, f as usize);
            self.adj[e] &= !(1 << f);
            self.adj[f] &= !(1 << e);
            self.non[e] &= !(1 << f);
            self.non[f] &= !(1 << e);
        }
    }

    fn clear_queue(&mut self) {
        for &i in &self.queue {
            self.queued[i] = false;
        }
        self.queue.clear();
    }

    /// Run propagation to a fixpoint. Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while let Some(i) = self.queue.pop() {
            self.queued[i] = false;
            let ok = match self.constraints[i] {
                Constraint::Cycle(c) => self.propagate_cycle(c),
                Constraint::Cross(a, b) => self.propagate_cross(a, b),
            };
            if !ok {
                self.clear_queue();
                return false;
            }
        }
        true
    }

    fn propagate_cycle(&mut self, c: ElemSet) -> bool {
        let size = c.len();
        for e in c.iter() {
            let rest = c.without(e).0;
            let a = self.adj[e] & rest;
            let u = rest & !self.decided(e);
            let (na, nu) = (a.count_ones(), u.count_ones());
            if na > 2 || na + nu < 2 {
                return false;
            }
            if nu > 0 && (na == 2 || na + nu == 2) {
                let adjacent = na < 2;
                for f in ElemSet(u).iter() {
                    if !self.assign(e, f, adjacent) {
                        return false;
                    }
                }
            }
        }
        // Components of the adjacency graph inside c are paths or cycles.
        let mut seen = ElemSet::EMPTY;
        for s in c.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = ElemSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = ElemSet::EMPTY;
                for x in frontier.iter() {
                    next = next.union(ElemSet(self.adj[x] & c.0));
                }
                frontier = next.minus(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            let k = comp.len();
            if k < 3 {
                continue;
            }
            let degree_sum: u32 = comp.iter().map(|x| (self.adj[x] & c.0).count_ones()).sum();
            let edges = degree_sum as usize / 2;
            if edges > k {
                return false;
            }
            if edges == k {
                if k < size {
                    return false;
                }
                continue;
            }
            let ends: Vec<usize> = comp.iter().filter(|&x| (self.adj[x] & c.0).count_ones() < 2).collect();
            let [x, y] = ends[..] else { return false };
            if !self.assign(x, y, k == size) {
                return false;
            }
        }
        true
    }

    fn propagate_cross(&mut self, a: ElemSet, b: ElemSet) -> bool {
        let mut na = 0u32;
        let mut nu = 0u32;
        for x in a.iter() {
            na += (self.adj[x] & b.0).count_ones();
            nu += (b.0 & !self.decided(x)).count_ones();
        }
        if na > 2 || na + nu < 2 {
            return false;
        }
        if nu > 0 && (na == 2 || na + nu == 2) {
            let adjacent = na < 2;
            for x in a.iter() {
                for y in ElemSet(b.0 & !self.decided(x)).iter() {
                    if !self.assign(x, y, adjacent) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The next pair to branch on, or `None` when every cycle constraint is decided.
    fn choose(&self) -> Option<(usize, usize)> {
        for con in &self.constraints[..self.cycles] {
            let Constraint::Cycle(c) = *con else { unreachable!() };
            let mut best: Option<(u32, u32, usize, u64)> = None;
            for e in c.iter() {
                let rest = c.without(e).0;
                let u = rest & !self.decided(e);
                if u == 0 {
                    continue;
                }
                let na = (self.adj[e] & rest).count_ones();
                let key = (na, u.count_ones());
                let better = match best {
                    None => true,
                    Some((ba, bu, _, _)) => key.0 > ba || (key.0 == ba && key.1 < bu),
                };
                if better {
                    best = Some((key.0, key.1, e, u));
                }
            }
            if let Some((_, _, e, u)) = best {
                return Some((e, u.trailing_zeros() as usize));
            }
        }
        None
    }

    /// Explore the search tree, calling `on_solution` at every complete assignment until it
    /// returns false.
    pub fn run(&mut self, on_solution: &mut dyn FnMut(&Engine) -> bool) -> Outcome {
        self.queue = (0..self.constraints.len()).collect();
        self.queued = vec![true; self.constraints.len()];
        if !self.propagate() {
            return Outcome::Exhausted;
        }
        self.descend(on_solution)
    }

    fn descend(&mut self, on_solution: &mut dyn FnMut(&Engine) -> bool) -> Outcome {
        let Some((e, f)) = self.choose() else {
            return if on_solution(self) { Outcome::Exhausted } else { Outcome::Stopped };
        };
        for adjacent in [true, false] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Outcome::OutOfBudget;
            }
            let mark = self.trail.len();
            if self.assign(e, f, adjacent) && self.propagate() {
                match self.descend(on_solution) {
                    Outcome::Exhausted => {}
                    other => {
                        self.undo_to(mark);
                        return other;
                    }
                }
            }
            self.undo_to(mark);
        }
        Outcome::Exhausted
    }

    /// The assignment described by a complete state.
    pub fn assignment(&self) -> OrderingAssignment {
        let m = self.m;
        let orderings = m
            .circuits()
            .iter()
            .map(|&c| {
                let seq = if c.len() <= 2 { c.to_vec() } else { self.walk(c) };
                CyclicOrdering::canonicalize(&seq).expect("permutation of a circuit")
            })
            .collect();
        OrderingAssignment::new(m, orderings).expect("covers every circuit")
    }

    fn walk(&self, c: ElemSet) -> Vec<usize> {
        let start = c.first().unwrap();
        let mut seq = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while seq.len() < c.len() {
            let next = ElemSet(self.adj[cur] & c.0).iter().find(|&x| x != prev).expect("Hamiltonian cycle");
            prev = cur;
            cur = next;
            seq.push(cur);
        }
        seq
    }
}
