//! Backtracking search for constant-intersection block systems.
//!
//! A problem asks for `blocks` distinct `k`-subsets of `0..points` such that
//! any two meet in exactly `mu` points, every point lies in `degree` blocks and
//! every pair of points lies in a number of blocks from `pair_degrees`.
//!
//! The search always extends with a block through the lowest point that still
//! lacks blocks. Points with the same incidence pattern over the blocks placed
//! so far are interchangeable, so a new block is described by how many points
//! it takes from each such class, and it takes the lowest ones.

use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProblem {
    pub points: usize,
    pub blocks: usize,
    pub k: usize,
    pub mu: usize,
    pub degree: usize,
    pub pair_degrees: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<u64>),
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

impl BlockProblem {
    /// The same problem on complemented blocks. Only meaningful when
    /// [`Self::obviously_infeasible`] finds nothing.
    pub fn complemented(&self) -> BlockProblem {
        let k = self.points - self.k;
        BlockProblem {
            points: self.points,
            blocks: self.blocks,
            k,
            mu: (self.points + self.mu).saturating_sub(2 * self.k),
            degree: self.blocks - self.degree,
            pair_degrees: self
                .pair_degrees
                .iter()
                .filter_map(|&v| (v + self.blocks).checked_sub(2 * self.degree))
                .collect(),
        }
    }

    /// Counting conditions that do not need any search.
    pub fn obviously_infeasible(&self) -> Option<String> {
        if self.points == 0 || self.points > 64 || self.blocks > 64 {
            return Some(format!("{} points and {} blocks exceed the search limits", self.points, self.blocks));
        }
        if self.k > self.points || self.mu > self.k || self.degree > self.blocks {
            return Some("block size, intersection or degree out of range".into());
        }
        if self.blocks * self.k != self.points * self.degree {
            return Some(format!(
                "{} blocks of size {} give {} incidences, but {} points of degree {} need {}",
                self.blocks,
                self.k,
                self.blocks * self.k,
                self.points,
                self.degree,
                self.points * self.degree
            ));
        }
        let pairs = (self.points * (self.points - 1) / 2) as u64;
        let covered = (self.blocks * self.k * self.k.saturating_sub(1) / 2) as u64;
        let (lo, hi) = match (self.pair_degrees.first(), self.pair_degrees.last()) {
            (Some(&lo), Some(&hi)) => (lo as u64, hi as u64),
            _ => return Some("no admissible pair degree".into()),
        };
        if covered < lo * pairs || covered > hi * pairs {
            return Some(format!(
                "blocks cover {covered} pairs in total, outside [{}, {}] allowed by pair degrees {lo}..{hi}",
                lo * pairs,
                hi * pairs
            ));
        }
        if self.blocks >= 2 && self.k == self.mu {
            return Some("two blocks meeting in all their points coincide".into());
        }
        if self.blocks >= 2 && self.points + self.mu < 2 * self.k {
            return Some(format!(
                "two blocks of size {} on {} points meet in at least {} points, more than {}",
                self.k,
                self.points,
                2 * self.k - self.points,
                self.mu
            ));
        }
        None
    }

    /// Independent check of a finished configuration.
    pub fn is_solution(&self, blocks: &[u64]) -> bool {
        if blocks.len() != self.blocks {
            return false;
        }
        let in_range = |b: &u64| self.points == 64 || b >> self.points == 0;
        if !blocks.iter().all(|b| in_range(b) && b.count_ones() as usize == self.k) {
            return false;
        }
        for (i, a) in blocks.iter().enumerate() {
            if blocks[..i].iter().any(|b| (a & b).count_ones() as usize != self.mu) {
                return false;
            }
        }
        for p in 0..self.points {
            if blocks.iter().filter(|b| *b >> p & 1 == 1).count() != self.degree {
                return false;
            }
            for q in 0..p {
                let both = blocks.iter().filter(|b| *b >> p & 1 == 1 && *b >> q & 1 == 1).count();
                if !self.pair_degrees.contains(&both) {
                    return false;
                }
            }
        }
        true
    }
}

struct Class {
    signature: u64,
    members: Vec<usize>,
    open: bool,
}

struct Solver<'a> {
    p: &'a BlockProblem,
    /// smallest admissible pair degree `>= c`, or `usize::MAX`
    next_allowed: Vec<usize>,
    max_allowed: usize,
    placed: Vec<u64>,
    signature: Vec<u64>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Exhausted,
    Budget,
}

impl<'a> Solver<'a> {
    fn new(p: &'a BlockProblem, budget: u64) -> Self {
        let top = p.blocks + 1;
        let mut next_allowed = vec![usize::MAX; top + 1];
        for c in (0..top).rev() {
            next_allowed[c] = if p.pair_degrees.contains(&c) { c } else { next_allowed[c + 1] };
        }
        Solver {
            p,
            next_allowed,
            max_allowed: *p.pair_degrees.last().unwrap_or(&0),
            placed: Vec::with_capacity(p.blocks),
            signature: vec![0; p.points],
            nodes: 0,
            budget,
        }
    }

    fn classes(&self) -> Vec<Class> {
        let mut classes: Vec<Class> = Vec::new();
        let mut index: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
        for pt in 0..self.p.points {
            let s = self.signature[pt];
            match index.get(&s) {
                Some(&c) => classes[c].members.push(pt),
                None => {
                    index.insert(s, classes.len());
                    let open = (s.count_ones() as usize) < self.p.degree;
                    classes.push(Class { signature: s, members: vec![pt], open });
                }
            }
        }
        classes
    }

    /// Necessary conditions for completing the current partial system.
    fn consistent(&self, classes: &[Class]) -> bool {
        let remaining = self.p.blocks - self.placed.len();
        let deficit = |s: u64| self.p.degree - s.count_ones() as usize;
        // every future block meets each placed block in exactly mu points
        for (j, _) in self.placed.iter().enumerate() {
            let owed: usize = classes
                .iter()
                .filter(|c| c.signature >> j & 1 == 1)
                .map(|c| deficit(c.signature) * c.members.len())
                .sum();
            if owed != remaining * self.p.mu {
                return false;
            }
        }
        for (i, a) in classes.iter().enumerate() {
            let da = deficit(a.signature);
            if da > remaining {
                return false;
            }
            let start = if a.members.len() >= 2 { i } else { i + 1 };
            for b in &classes[start..] {
                let cur = (a.signature & b.signature).count_ones() as usize;
                let slack = remaining.min(da).min(deficit(b.signature));
                let next = self.next_allowed[cur.min(self.next_allowed.len() - 1)];
                if next == usize::MAX || next - cur > slack {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) -> Step {
        if self.placed.len() == self.p.blocks {
            return Step::Found;
        }
        let classes = self.classes();
        let Some(pivot) = classes.iter().position(|c| c.open) else {
            return Step::Exhausted;
        };
        for block in self.candidates(&classes, pivot) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Budget;
            }
            let bit = 1u64 << self.placed.len();
            self.placed.push(block);
            for pt in 0..self.p.points {
                if block >> pt & 1 == 1 {
                    self.signature[pt] |= bit;
                }
            }
            let step = if self.consistent(&self.classes()) { self.run() } else { Step::Exhausted };
            match step {
                Step::Exhausted => {}
                other => return other,
            }
            for pt in 0..self.p.points {
                self.signature[pt] &= !bit;
            }
            self.placed.pop();
        }
        Step::Exhausted
    }

    /// Canonical new blocks: per-class counts meeting every placed block in
    /// `mu` points, respecting the pair-degree ceiling, containing the pivot.
    fn candidates(&self, classes: &[Class], pivot: usize) -> Vec<u64> {
        let m = classes.len();
        let placed = self.placed.len();
        let cap: Vec<usize> = classes.iter().map(|c| if c.open { c.members.len() } else { 0 }).collect();
        if cap[pivot] == 0 {
            return Vec::new();
        }
        // suffix sums of capacity, overall and per placed block
        let mut suffix = vec![0usize; m + 1];
        let mut suffix_block = vec![vec![0usize; placed]; m + 1];
        for i in (0..m).rev() {
            suffix[i] = suffix[i + 1] + cap[i];
            for j in 0..placed {
                suffix_block[i][j] = suffix_block[i + 1][j] + if classes[i].signature >> j & 1 == 1 { cap[i] } else { 0 };
            }
        }
        let mut out = Vec::new();
        let mut counts = vec![0usize; m];
        let mut meet = vec![0usize; placed];
        self.fill(classes, pivot, &cap, &suffix, &suffix_block, 0, 0, &mut counts, &mut meet, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        classes: &[Class],
        pivot: usize,
        cap: &[usize],
        suffix: &[usize],
        suffix_block: &[Vec<usize>],
        i: usize,
        size: usize,
        counts: &mut [usize],
        meet: &mut [usize],
        out: &mut Vec<u64>,
    ) {
        let k = self.p.k;
        let mu = self.p.mu;
        if size + suffix[i] < k || meet.iter().enumerate().any(|(j, &x)| x + suffix_block[i][j] < mu) {
            return;
        }
        if i == classes.len() {
            if size == k && meet.iter().all(|&x| x == mu) {
                let mut block = 0u64;
                for (c, &x) in classes.iter().zip(counts.iter()) {
                    for &pt in &c.members[..x] {
                        block |= 1 << pt;
                    }
                }
                out.push(block);
            }
            return;
        }
        let sig = classes[i].signature;
        let mut hi = cap[i].min(k - size);
        for j in 0..meet.len() {
            if sig >> j & 1 == 1 {
                hi = hi.min(mu - meet[j]);
            }
        }
        // two new points in this class would share one more block than now
        if sig.count_ones() as usize + 1 > self.max_allowed {
            hi = hi.min(1);
        }
        // points from two chosen classes also become a more covered pair
        if hi > 0 {
            for (c, &x) in counts[..i].iter().enumerate() {
                if x > 0 && (classes[c].signature & sig).count_ones() as usize + 1 > self.max_allowed {
                    hi = 0;
                    break;
                }
            }
        }
        let lo = usize::from(i == pivot);
        if lo > hi {
            return;
        }
        for x in (lo..=hi).rev() {
            counts[i] = x;
            for j in 0..meet.len() {
                if sig >> j & 1 == 1 {
                    meet[j] += x;
                }
            }
            self.fill(classes, pivot, cap, suffix, suffix_block, i + 1, size + x, counts, meet, out);
            for j in 0..meet.len() {
                if sig >> j & 1 == 1 {
                    meet[j] -= x;
                }
            }
        }
        counts[i] = 0;
    }
}

/// Exhaustive search within a node budget.
pub fn search(problem: &BlockProblem, budget: u64) -> SearchResult {
    if problem.obviously_infeasible().is_some() {
        return SearchResult { outcome: SearchOutcome::Exhausted, nodes: 0 };
    }
    let mut solver = Solver::new(problem, budget);
    let outcome = match solver.run() {
        Step::Found => {
            let blocks = solver.placed.clone();
            assert!(problem.is_solution(&blocks), "search produced an invalid configuration");
            SearchOutcome::Found(blocks)
        }
        Step::Exhausted => SearchOutcome::Exhausted,
        Step::Budget => SearchOutcome::BudgetExceeded,
    };
    SearchResult { outcome, nodes: solver.nodes }
}
