//! Mixed colorings with `a` normal colors (independent sets) and `b` path
//! colors (linear forests), and graph generators for the hardness reductions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::oracle;
use crate::search::{mixed_search, Budget};

/// Numbers of normal and path colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedSpec {
    pub a: usize,
    pub b: usize,
}

impl MixedSpec {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a + b == 0 {
            return Err(Error::Precondition("at least one color is required".into()));
        }
        Ok(MixedSpec { a, b })
    }
}

impl fmt::Display for MixedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Colors `0..a` are normal, `a..a+b` are path colors.
pub fn mixed_color(g: &Graph, spec: MixedSpec, budget: &Budget) -> Result<Option<Coloring>> {
    Ok(mixed_search(g, spec.a, spec.b, budget)?.map(Coloring::new))
}

pub fn is_mixed_coloring(g: &Graph, spec: MixedSpec, c: &Coloring) -> bool {
    oracle::is_mixed_coloring(g, spec.a, spec.b, &c.colors)
}

/// Joins two disjoint copies of `K_{a+2b-1}` to every vertex. The result is
/// `(a,b)`-colorable exactly when `g` is `(a+b)`-colorable.
pub fn reduce_add_cliques(g: &Graph, spec: MixedSpec) -> Result<Graph> {
    let MixedSpec { a, b } = spec;
    if a + b < 2 || (a, b) == (2, 0) {
        return Err(Error::Precondition(format!(
            "clique reduction needs a+b >= 2 and (a,b) != (2,0), got {spec}"
        )));
    }
    let k = a + 2 * b - 1;
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut next = n;
    for v in 0..n {
        for _ in 0..2 {
            let clique: Vec<usize> = (next..next + k).collect();
            next += k;
            for (i, &x) in clique.iter().enumerate() {
                edges.push((v, x));
                for &y in &clique[i + 1..] {
                    edges.push((x, y));
                }
            }
        }
    }
    Graph::new(next, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }
}

/// A 3-CNF formula; every clause has exactly three literals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Formula {
    pub num_vars: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl Formula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::Input(format!(
                    "clause {i}: variable {} out of range (have {num_vars})",
                    l.var + 1
                )));
            }
        }
        Ok(Formula { num_vars, clauses })
    }

    pub fn satisfied_by(&self, assignment: &[bool], variant: Variant) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| l.eval(assignment)).count();
            match variant {
                Variant::OneInThree => t == 1,
                Variant::Nae => t == 1 || t == 2,
            }
        })
    }

    /// First satisfying assignment in binary counting order.
    pub fn brute_force(&self, variant: Variant) -> Option<Vec<bool>> {
        assert!(self.num_vars < 30, "brute force is for tiny formulas");
        (0u32..1 << self.num_vars)
            .map(|m| {
                (0..self.num_vars)
                    .map(|k| m >> k & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .find(|a| self.satisfied_by(a, variant))
    }
}

/// Satisfiability flavour targeted by a formula graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "one-in-three")]
    OneInThree,
    #[serde(rename = "nae")]
    Nae,
}

impl Variant {
    /// One-in-three uses one normal and one path color, NAE two path colors.
    pub fn spec(self) -> MixedSpec {
        match self {
            Variant::OneInThree => MixedSpec { a: 1, b: 1 },
            Variant::Nae => MixedSpec { a: 0, b: 2 },
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::OneInThree => "one-in-three",
            Variant::Nae => "nae",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "one-in-three" => Ok(Variant::OneInThree),
            "nae" => Ok(Variant::Nae),
            other => Err(Error::Input(format!("unknown variant {other:?}"))),
        }
    }
}

/// A variable gadget with its two terminals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub graph: Graph,
    pub v: usize,
    pub v_bar: usize,
}

/// The certified gadget for a variant. In every coloring the terminals get
/// different colors, and a terminal on a path color already has two
/// same-colored neighbors inside the gadget.
pub fn shipped_gadget(variant: Variant) -> Gadget {
    let edges: &[(usize, usize)] = match variant {
        Variant::OneInThree => &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 5),
        ],
        Variant::Nae => &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ],
    };
    Gadget {
        graph: Graph::new(6, edges.iter().copied()).expect("gadget edges are valid"),
        v: 0,
        v_bar: 1,
    }
}

/// Outcome of the exhaustive gadget check, one flag per contract clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetReport {
    /// Terminals always differ.
    pub terminals_differ: bool,
    /// Both orderings of two distinct colors on the terminals extend.
    pub both_patterns_extend: bool,
    /// Pendant attachments always differ from their terminal.
    pub attachments_forced: bool,
}

impl GadgetReport {
    pub fn ok(&self) -> bool {
        self.terminals_differ && self.both_patterns_extend && self.attachments_forced
    }
}

fn all_mixed_colorings(g: &Graph, spec: MixedSpec) -> Vec<Vec<usize>> {
    let k = spec.a + spec.b;
    let n = g.n();
    let mut out = Vec::new();
    let mut col = vec![0usize; n];
    loop {
        if oracle::is_mixed_coloring(g, spec.a, spec.b, &col) {
            out.push(col.clone());
        }
        let mut i = 0;
        while i < n && col[i] == k - 1 {
            col[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        col[i] += 1;
    }
}

/// Exhaustively checks the gadget contract, with `attachments` pendant
/// vertices hung on each terminal for the forcing clause.
pub fn verify_variable_gadget(
    gadget: &Gadget,
    variant: Variant,
    attachments: usize,
) -> GadgetReport {
    let spec = variant.spec();
    let (v, w) = (gadget.v, gadget.v_bar);
    let base = all_mixed_colorings(&gadget.graph, spec);
    let terminals_differ = base.iter().all(|c| c[v] != c[w]);
    let k = spec.a + spec.b;
    let both_patterns_extend = (0..k).all(|x| {
        (0..k).filter(|&y| y != x).all(|y| {
            // one normal + one path under (1,1), both orders of the two path colors under (0,2)
            base.iter().any(|c| c[v] == x && c[w] == y)
        })
    });
    let n = gadget.graph.n();
    let mut edges = gadget.graph.edges().to_vec();
    let mut owner = Vec::new();
    for t in [v, w] {
        for _ in 0..attachments {
            edges.push((t, n + owner.len()));
            owner.push(t);
        }
    }
    let hung = Graph::new(n + owner.len(), edges).expect("pendant edges are fresh");
    let attachments_forced = all_mixed_colorings(&hung, spec)
        .iter()
        .all(|c| owner.iter().enumerate().all(|(i, &t)| c[n + i] != c[t]));
    GadgetReport {
        terminals_differ,
        both_patterns_extend,
        attachments_forced,
    }
}

/// Reduction graph for a formula, with the vertices needed to decode colorings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaGraph {
    pub graph: Graph,
    pub variant: Variant,
    /// `(v_k, v̄_k)` per variable.
    pub terminals: Vec<(usize, usize)>,
    /// The three literal vertices of each clause triangle.
    pub literals: Vec<[usize; 3]>,
}

/// One gadget per variable followed by one triangle per clause; a positive
/// literal's vertex is joined to `v_k`, a negated one to `v̄_k`.
pub fn build_formula_graph(f: &Formula, variant: Variant) -> FormulaGraph {
    let gadget = shipped_gadget(variant);
    let gn = gadget.graph.n();
    let mut edges = Vec::new();
    let mut terminals = Vec::with_capacity(f.num_vars);
    for k in 0..f.num_vars {
        let off = k * gn;
        edges.extend(
            gadget
                .graph
                .edges()
                .iter()
                .map(|&(a, b)| (a + off, b + off)),
        );
        terminals.push((gadget.v + off, gadget.v_bar + off));
    }
    let mut next = f.num_vars * gn;
    let mut literals = Vec::with_capacity(f.clauses.len());
    for clause in &f.clauses {
        let tri = [next, next + 1, next + 2];
        next += 3;
        edges.extend([(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]);
        for (l, &c) in clause.iter().zip(&tri) {
            let (v, v_bar) = terminals[l.var];
            edges.push((c, if l.negated { v_bar } else { v }));
        }
        literals.push(tri);
    }
    let graph = Graph::new(next, edges).expect("reduction graph is simple");
    FormulaGraph {
        graph,
        variant,
        terminals,
        literals,
    }
}

/// Reads the assignment off a valid coloring of the reduction graph. Under
/// one-in-three a variable is true when `v_k` has the path color (its
/// positive literal vertices are then on the normal color); under NAE when
/// `v_k` has color 0.
pub fn decode_assignment(c: &Coloring, fg: &FormulaGraph) -> Result<Vec<bool>> {
    let spec = fg.variant.spec();
    if !is_mixed_coloring(&fg.graph, spec, c) {
        return Err(Error::Precondition(format!(
            "not a valid {spec} coloring of the reduction graph"
        )));
    }
    Ok(fg
        .terminals
        .iter()
        .map(|&(v, _)| match fg.variant {
            Variant::OneInThree => c.color(v) == 1,
            Variant::Nae => c.color(v) == 0,
        })
        .collect())
}

/// Parses DIMACS CNF with exactly three literals per clause. A comment line
/// `c variant: one-in-three|nae` selects the variant.
pub fn parse_dimacs(text: &str) -> Result<(Formula, Option<Variant>)> {
    let mut variant = None;
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        let at = |msg: String| Error::Input(format!("line {}: {msg}", ln + 1));
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('c') {
            if let Some(v) = rest.trim().strip_prefix("variant:") {
                variant = Some(v.parse::<Variant>().map_err(|e| at(e.to_string()))?);
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            match parts[..] {
                ["cnf", v, c] => {
                    let v = v
                        .parse()
                        .map_err(|_| at(format!("bad variable count {v:?}")))?;
                    let c = c
                        .parse()
                        .map_err(|_| at(format!("bad clause count {c:?}")))?;
                    header = Some((v, c));
                }
                _ => return Err(at("expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        let (nv, _) = header.ok_or_else(|| at("clause before `p cnf` header".into()))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| at(format!("bad literal {tok:?}")))?;
            if x == 0 {
                let clause: [Literal; 3] = pending
                    .as_slice()
                    .try_into()
                    .map_err(|_| at(format!("clause has {} literals, need 3", pending.len())))?;
                clauses.push(clause);
                pending.clear();
            } else {
                let var = x.unsigned_abs() as usize - 1;
                if var >= nv {
                    return Err(at(format!("variable {} exceeds declared {nv}", var + 1)));
                }
                pending.push(Literal {
                    var,
                    negated: x < 0,
                });
            }
        }
    }
    let (nv, nc) = header.ok_or_else(|| Error::Input("missing `p cnf` header".into()))?;
    if !pending.is_empty() {
        return Err(Error::Input("last clause is not terminated by 0".into()));
    }
    if clauses.len() != nc {
        return Err(Error::Input(format!(
            "header declares {nc} clauses, found {}",
            clauses.len()
        )));
    }
    Ok((Formula::new(nv, clauses)?, variant))
}

pub fn write_dimacs(f: &Formula, variant: Option<Variant>) -> String {
    let mut s = String::new();
    if let Some(v) = variant {
        s.push_str(&format!("c variant: {v}\n"));
    }
    s.push_str(&format!("p cnf {} {}\n", f.num_vars, f.clauses.len()));
    for c in &f.clauses {
        for l in c {
            let x = l.var as i64 + 1;
            s.push_str(&format!("{} ", if l.negated { -x } else { x }));
        }
        s.push_str("0\n");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::chromatic_number;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn solver_examples() {
        let k3 = corpus::complete(3);
        let c = mixed_color(&k3, MixedSpec::new(1, 1).unwrap(), &b())
            .unwrap()
            .unwrap();
        assert!(is_mixed_coloring(&k3, MixedSpec { a: 1, b: 1 }, &c));
        assert!(
            mixed_color(&corpus::complete(5), MixedSpec { a: 1, b: 1 }, &b())
                .unwrap()
                .is_none()
        );
        assert!(
            mixed_color(&corpus::complete(4), MixedSpec { a: 0, b: 2 }, &b())
                .unwrap()
                .is_some()
        );
        assert!(MixedSpec::new(0, 0).is_err());
    }

    #[test]
    fn clique_reduction_examples() {
        let spec = MixedSpec { a: 1, b: 2 };
        let h = reduce_add_cliques(&corpus::complete(3), spec).unwrap();
        assert_eq!(h.n(), 27);
        assert!(mixed_color(&h, spec, &b()).unwrap().is_some());
        let h = reduce_add_cliques(&corpus::complete(4), spec).unwrap();
        assert!(mixed_color(&h, spec, &b()).unwrap().is_none());
        let h = reduce_add_cliques(&Graph::empty(3), MixedSpec { a: 1, b: 1 }).unwrap();
        assert!(mixed_color(&h, MixedSpec { a: 1, b: 1 }, &b())
            .unwrap()
            .is_some());
        assert!(reduce_add_cliques(&corpus::complete(3), MixedSpec { a: 2, b: 0 }).is_err());
        assert!(reduce_add_cliques(&corpus::complete(3), MixedSpec { a: 1, b: 0 }).is_err());
    }

    #[test]
    fn clique_reduction_matches_chromatic_number_on_four_vertices() {
        for g in corpus::all_graphs(4) {
            let (chi, _) = chromatic_number(&g, &b()).unwrap();
            for spec in [MixedSpec { a: 1, b: 2 }, MixedSpec { a: 2, b: 1 }] {
                let h = reduce_add_cliques(&g, spec).unwrap();
                let got = mixed_color(&h, spec, &b()).unwrap().is_some();
                assert_eq!(got, chi <= spec.a + spec.b, "{g:?} {spec}");
            }
        }
    }

    #[test]
    fn gadgets_are_certified() {
        for variant in [Variant::OneInThree, Variant::Nae] {
            let r = verify_variable_gadget(&shipped_gadget(variant), variant, 3);
            assert!(r.ok(), "{variant}: {r:?}");
        }
        let bare = Gadget {
            graph: corpus::complete(2),
            v: 0,
            v_bar: 1,
        };
        for variant in [Variant::OneInThree, Variant::Nae] {
            let r = verify_variable_gadget(&bare, variant, 1);
            assert!(!r.ok(), "{variant}: {r:?}");
        }
    }

    #[test]
    fn single_clause() {
        let f = Formula::new(3, vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]]).unwrap();
        let fg = build_formula_graph(&f, Variant::OneInThree);
        let c = mixed_color(&fg.graph, Variant::OneInThree.spec(), &b())
            .unwrap()
            .unwrap();
        let a = decode_assignment(&c, &fg).unwrap();
        assert_eq!(a.iter().filter(|&&x| x).count(), 1);
        assert!(f.satisfied_by(&a, Variant::OneInThree));
    }

    #[test]
    fn degenerate_clause_consistent() {
        let f = Formula::new(1, vec![[Literal::pos(0), Literal::neg(0), Literal::pos(0)]]).unwrap();
        for variant in [Variant::Nae, Variant::OneInThree] {
            let fg = build_formula_graph(&f, variant);
            let got = mixed_color(&fg.graph, variant.spec(), &b()).unwrap();
            assert_eq!(got.is_some(), f.brute_force(variant).is_some());
            if let Some(c) = got {
                assert!(f.satisfied_by(&decode_assignment(&c, &fg).unwrap(), variant));
            }
        }
    }

    #[test]
    fn unsatisfiable_one_in_three() {
        // x, y, z: (x y z) with (x̄ ȳ z̄) forcing two false among ... plus a clash
        let l = Literal::pos;
        let n = Literal::neg;
        let f = Formula::new(
            2,
            vec![[l(0), l(0), l(1)], [l(0), l(1), l(1)], [n(0), n(1), l(0)]],
        )
        .unwrap();
        assert!(f.brute_force(Variant::OneInThree).is_none());
        let fg = build_formula_graph(&f, Variant::OneInThree);
        assert!(mixed_color(&fg.graph, Variant::OneInThree.spec(), &b())
            .unwrap()
            .is_none());
    }

    #[test]
    fn nae_swap_gives_complement() {
        let l = Literal::pos;
        let f = Formula::new(3, vec![[l(0), l(1), l(2)], [l(0), Literal::neg(1), l(2)]]).unwrap();
        let fg = build_formula_graph(&f, Variant::Nae);
        let c = mixed_color(&fg.graph, Variant::Nae.spec(), &b())
            .unwrap()
            .unwrap();
        let a = decode_assignment(&c, &fg).unwrap();
        let swapped = Coloring::new(c.colors.iter().map(|&x| 1 - x).collect());
        let a2 = decode_assignment(&swapped, &fg).unwrap();
        assert!(a.iter().zip(&a2).all(|(x, y)| x != y));
        assert!(f.satisfied_by(&a, Variant::Nae) && f.satisfied_by(&a2, Variant::Nae));
    }

    #[test]
    fn decode_rejects_invalid() {
        let f = Formula::new(1, vec![[Literal::pos(0); 3]]).unwrap();
        let fg = build_formula_graph(&f, Variant::Nae);
        assert!(decode_assignment(&Coloring::new(vec![0; fg.graph.n()]), &fg).is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c variant: nae\np cnf 3 2\n1 -2 3 0\n-1 2\n 3 0\n";
        let (f, v) = parse_dimacs(text).unwrap();
        assert_eq!(v, Some(Variant::Nae));
        assert_eq!(
            f.clauses[1],
            [Literal::neg(0), Literal::pos(1), Literal::pos(2)]
        );
        let (g, w) = parse_dimacs(&write_dimacs(&f, v)).unwrap();
        assert_eq!((g, w), (f, v));
        assert!(parse_dimacs("p cnf 2 1\n1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("1 2 3 0\n").is_err());
    }
}
