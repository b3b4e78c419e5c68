//! Exhaustive mixed-coloring search with conflict-directed backjumping.
//!
//! Colors `0..normal` must induce independent sets; colors
//! `normal..normal + path` must induce linear forests. The search is
//! complete: `Ok(None)` means no coloring exists.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node budget for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 50_000_000,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }
}

#[derive(Clone)]
struct LevelSet {
    words: Vec<u64>,
}

impl LevelSet {
    fn new(n: usize) -> Self {
        LevelSet {
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }
    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }
    fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }
    fn union_with(&mut self, other: &LevelSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }
    fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Maximum-cardinality-search order: each next vertex has the most already
/// ordered neighbors (ties: higher degree, then smaller id).
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (weight[a], g.degree(a), std::cmp::Reverse(a)).cmp(&(
                    weight[b],
                    g.degree(b),
                    std::cmp::Reverse(b),
                ))
            })
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    order
}

struct State<'g> {
    g: &'g Graph,
    normal: usize,
    pos: Vec<usize>,
    color: Vec<Option<usize>>,
}

impl State<'_> {
    fn is_path(&self, c: usize) -> bool {
        c >= self.normal
    }

    fn same_colored(&self, v: usize, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.color[u] == Some(c))
            .collect();
        out.sort_by_key(|&u| self.pos[u]);
        out
    }

    /// `Err` carries vertices whose current colors jointly forbid `v = c`.
    fn check(&self, v: usize, c: usize) -> std::result::Result<(), Vec<usize>> {
        let same = self.same_colored(v, c);
        if !self.is_path(c) {
            return match same.first() {
                Some(&u) => Err(vec![u]),
                None => Ok(()),
            };
        }
        if same.len() >= 3 {
            return Err(same[..3].to_vec());
        }
        for &x in &same {
            let around = self.same_colored(x, c);
            if around.len() >= 2 {
                let mut culprits = vec![x];
                culprits.extend_from_slice(&around[..2]);
                return Err(culprits);
            }
        }
        if let [x, y] = same[..] {
            if let Some(path) = self.monochrome_path(x, y, c) {
                return Err(path);
            }
        }
        Ok(())
    }

    /// Walk from `x` inside color class `c` (max degree 2) looking for `y`.
    fn monochrome_path(&self, x: usize, y: usize, c: usize) -> Option<Vec<usize>> {
        let mut path = vec![x];
        let mut prev = usize::MAX;
        let mut cur = x;
        loop {
            let next = self
                .g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&u| u != prev && self.color[u] == Some(c))?;
            path.push(next);
            if next == y {
                return Some(path);
            }
            if next == x {
                return None;
            }
            prev = cur;
            cur = next;
        }
    }
}

/// Decides whether `g` has a coloring with `normal` independent classes and
/// `path` linear-forest classes. Returns a witness on success.
pub fn mixed_search(
    g: &Graph,
    normal: usize,
    path: usize,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if normal + path == 0 {
        return Ok(None);
    }
    let order = search_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut st = State {
        g,
        normal,
        pos,
        color: vec![None; n],
    };
    let total = normal + path;
    let mut used = vec![0usize; total];
    let mut domains: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut conf: Vec<LevelSet> = vec![LevelSet::new(n); n];
    let mut nodes: u64 = 0;

    let fresh_domain = |used: &[usize]| -> Vec<usize> {
        // Values are popped from the back, so store in reverse trial order.
        let mut d: Vec<usize> = (0..total).filter(|&c| used[c] > 0).collect();
        if let Some(c) = (0..normal).find(|&c| used[c] == 0) {
            d.push(c);
        }
        if let Some(c) = (normal..total).find(|&c| used[c] == 0) {
            d.push(c);
        }
        d.reverse();
        d
    };

    let mut level = 0;
    domains[0] = fresh_domain(&used);
    loop {
        if level == n {
            return Ok(Some(st.color.iter().map(|c| c.unwrap()).collect()));
        }
        let v = order[level];
        let mut placed = false;
        while let Some(c) = domains[level].pop() {
            nodes += 1;
            if nodes > budget.max_nodes {
                return Err(Error::BudgetExceeded(budget.max_nodes));
            }
            match st.check(v, c) {
                Ok(()) => {
                    st.color[v] = Some(c);
                    used[c] += 1;
                    placed = true;
                    break;
                }
                Err(culprits) => {
                    for u in culprits {
                        conf[level].insert(st.pos[u]);
                    }
                }
            }
        }
        if placed {
            level += 1;
            if level < n {
                conf[level].clear();
                domains[level] = fresh_domain(&used);
            }
            continue;
        }
        let Some(back) = conf[level].max() else {
            return Ok(None);
        };
        let mut carried = conf[level].clone();
        carried.remove(back);
        conf[back].union_with(&carried);
        for &u in &order[back..level] {
            if let Some(c) = st.color[u].take() {
                used[c] -= 1;
            }
        }
        level = back;
    }
}
