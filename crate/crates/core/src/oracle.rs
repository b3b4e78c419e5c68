//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive and shares no code with the
//! constructive modules, so it can be used to cross-check them.

use crate::graph::Graph;

/// Checks a mixed coloring from scratch: colors `< normal` induce no edge,
/// other colors induce components with `edges = vertices - 1` and degree <= 2.
pub fn is_mixed_coloring(g: &Graph, normal: usize, path: usize, colors: &[usize]) -> bool {
    if colors.len() != g.n() || colors.iter().any(|&c| c >= normal + path) {
        return false;
    }
    for &(u, v) in g.edges() {
        if colors[u] == colors[v] && colors[u] < normal {
            return false;
        }
    }
    for c in normal..normal + path {
        let members: Vec<usize> = (0..g.n()).filter(|&v| colors[v] == c).collect();
        let inside = |v: usize| colors[v] == c;
        for &v in &members {
            if g.neighbors(v).iter().filter(|&&u| inside(u)).count() > 2 {
                return false;
            }
        }
        // component-wise edge count
        let mut seen = vec![false; g.n()];
        for &s in &members {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            seen[s] = true;
            let (mut nv, mut deg_sum) = (0usize, 0usize);
            while let Some(v) = stack.pop() {
                nv += 1;
                for &u in g.neighbors(v) {
                    if inside(u) {
                        deg_sum += 1;
                        if !seen[u] {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
            }
            if deg_sum / 2 != nv - 1 {
                return false;
            }
        }
    }
    true
}

/// Enumerates all `(normal + path)^n` assignments.
pub fn mixed_colorable(g: &Graph, normal: usize, path: usize) -> bool {
    let k = normal + path;
    let n = g.n();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut col = vec![0usize; n];
    loop {
        if is_mixed_coloring(g, normal, path, &col) {
            return true;
        }
        let mut i = 0;
        while i < n && col[i] == k - 1 {
            col[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        col[i] += 1;
    }
}

pub fn chromatic_number(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&k| mixed_colorable(g, k, 0))
        .unwrap_or(g.n())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Lattice points on the closed segment `a`-`b`, found by scanning the
/// bounding box and testing collinearity and betweenness coordinate-wise.
pub fn segment_points_scan(a: &[i64], b: &[i64]) -> Vec<Vec<i64>> {
    let d = a.len();
    let lo: Vec<i64> = (0..d).map(|i| a[i].min(b[i])).collect();
    let hi: Vec<i64> = (0..d).map(|i| a[i].max(b[i])).collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        if on_closed_segment(a, b, &cur) {
            out.push(cur.clone());
        }
        let mut i = 0;
        while i < d && cur[i] == hi[i] {
            cur[i] = lo[i];
            i += 1;
        }
        if i == d {
            break;
        }
        cur[i] += 1;
    }
    out
}

/// Point `p` on closed segment `a`-`b` (any dimension), by 2x2 minors and range checks.
pub fn on_closed_segment(a: &[i64], b: &[i64], p: &[i64]) -> bool {
    let d = a.len();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = (p[i] - a[i]) * (b[j] - a[j]);
            let rhs = (p[j] - a[j]) * (b[i] - a[i]);
            if lhs != rhs {
                return false;
            }
        }
    }
    (0..d).all(|i| a[i].min(b[i]) <= p[i] && p[i] <= a[i].max(b[i]))
}

/// Number of lattice points on a segment via the gcd of coordinate differences.
pub fn lattice_count(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).fold(0, |g, (x, y)| gcd(g, x - y)) + 1
}

/// Trial-division primality, for small inputs.
pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}
