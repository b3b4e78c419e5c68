//! Drawings with few lattice points per edge: residue pattern sequences, the
//! CRT column family, visible point selection, and the coloring round trip.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::lattice::{
    crt_solve, difference_gcd, is_prime, on_segment, prime_factors, primes_below, Congruence,
    GridPoint, ResidueSystem,
};
use crate::verify::GridDrawing;

/// The `k`-th tuple of `(Z_p)^d` in lexicographic order (last coordinate fastest).
fn lex_tuple(p: u64, d: usize, mut k: u64) -> Vec<u64> {
    let mut out = vec![0; d];
    for slot in out.iter_mut().rev() {
        *slot = k % p;
        k /= p;
    }
    out
}

/// Term `i` of the periodic sequence over `(Z_{p^e})^d`.
///
/// Writing `i mod p^{de}` in base `p^d` with digits `k_0, k_1, ...`, the term
/// is `sum_j p^j * lex(k_j)`. Terms are distinct within one period and reduce
/// mod `p^{e-1}` to the term of level `e - 1`.
pub fn pattern_term(p: u64, e: u32, d: usize, i: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if e == 0 || d == 0 {
        return Err(Error::Precondition(
            "exponent and dimension must be positive".into(),
        ));
    }
    let base = p
        .checked_pow(d as u32)
        .ok_or_else(|| Error::Precondition("p^d overflows".into()))?;
    let period = base
        .checked_pow(e)
        .ok_or_else(|| Error::Precondition("period overflows".into()))?;
    let mut idx = i % period;
    let mut out = vec![0u64; d];
    let mut scale = 1u64;
    for _ in 0..e {
        let digit = idx % base;
        idx /= base;
        for (o, t) in out.iter_mut().zip(lex_tuple(p, d, digit)) {
            *o += scale * t;
        }
        scale *= p;
    }
    Ok(out)
}

/// Least `e >= 1` with `p^{de} >= s`.
pub fn column_exponent(p: u64, s: u64, d: usize) -> u32 {
    let mut e = 1u32;
    let mut pow = BigInt::from(p).pow(d as u32);
    let step = pow.clone();
    while pow < BigInt::from(s) {
        pow *= &step;
        e += 1;
    }
    e
}

mod bigint_rows {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(BigInt::to_string).collect())
            .collect();
        strings.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        s.parse()
                            .map_err(|_| de::Error::custom(format!("bad integer {s:?}")))
                    })
                    .collect()
            })
            .collect()
    }
}

/// `s` columns of `Z^d` whose cross-column segments carry few lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnFamily {
    pub s: u64,
    pub d: usize,
    /// `p -> f(p)` for every prime `p < s`.
    pub exponents: BTreeMap<u64, u32>,
    /// Product of `p^{f(p)}`; the period of ranks and of the pattern part of last coordinates.
    #[serde(with = "crate::lattice::bigint_string")]
    pub modulus: BigInt,
    #[serde(with = "bigint_rows")]
    pub ranks: Vec<Vec<BigInt>>,
    /// Congruences on the last coordinate of each column, fixups included.
    pub last: Vec<ResidueSystem>,
    /// Extra primes `p >= s` with the residue assigned to each column.
    pub fixups: BTreeMap<u64, Vec<u64>>,
}

impl ColumnFamily {
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Smallest admissible last coordinate of column `i` and the step between admissible ones.
    pub fn last_base(&self, i: usize) -> (BigInt, BigInt) {
        let sol = crt_solve(&self.last[i]).expect("column residue systems are consistent");
        (sol.value, sol.modulus)
    }

    /// Point of column `i` with the given last coordinate.
    pub fn point(&self, i: usize, last: BigInt) -> GridPoint {
        let mut c = self.ranks[i].clone();
        c.push(last);
        GridPoint(c)
    }
}

/// Builds the family for `s` columns in `Z^d`. Each rank is the least
/// nonnegative CRT solution, bumped by the modulus while it repeats an
/// earlier rank. Fixup prime `p` gives column `i` the residue `i mod p`.
pub fn build_column_family(s: u64, d: usize, fixup_primes: &[u64]) -> Result<ColumnFamily> {
    if s < 2 {
        return Err(Error::Precondition(format!(
            "need at least 2 columns, got {s}"
        )));
    }
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    for &p in fixup_primes {
        if p < s || !is_prime(p) {
            return Err(Error::Precondition(format!(
                "fixup {p} must be a prime >= {s}"
            )));
        }
    }
    let primes = primes_below(s);
    let exponents: BTreeMap<u64, u32> = primes
        .iter()
        .map(|&p| (p, column_exponent(p, s, d)))
        .collect();
    let moduli: Vec<(u64, BigInt)> = exponents
        .iter()
        .map(|(&p, &e)| (p, BigInt::from(p).pow(e)))
        .collect();
    let modulus: BigInt = moduli.iter().map(|(_, m)| m).product();

    let mut ranks: Vec<Vec<BigInt>> = Vec::with_capacity(s as usize);
    let mut last = Vec::with_capacity(s as usize);
    let mut fixup_list: Vec<u64> = fixup_primes.to_vec();
    fixup_list.sort_unstable();
    fixup_list.dedup();

    for i in 0..s {
        let terms: Vec<Vec<u64>> = moduli
            .iter()
            .map(|&(p, _)| pattern_term(p, exponents[&p], d, i))
            .collect::<Result<_>>()?;
        let mut rank = Vec::with_capacity(d - 1);
        for c in 0..d - 1 {
            let rs = ResidueSystem::new(
                moduli
                    .iter()
                    .zip(&terms)
                    .map(|((_, m), t)| Congruence::new(m.clone(), t[c]))
                    .collect::<Result<_>>()?,
            );
            rank.push(crt_solve(&rs)?.value);
        }
        while ranks.contains(&rank) {
            rank[0] += &modulus;
        }
        ranks.push(rank);
        let mut rs = ResidueSystem::new(
            moduli
                .iter()
                .zip(&terms)
                .map(|((_, m), t)| Congruence::new(m.clone(), t[d - 1]))
                .collect::<Result<_>>()?,
        );
        for &p in &fixup_list {
            rs.push(Congruence::new(p, i % p)?);
        }
        last.push(rs);
    }
    let fixups = fixup_list
        .iter()
        .map(|&p| (p, (0..s).map(|i| i % p).collect()))
        .collect();
    Ok(ColumnFamily {
        s,
        d,
        exponents,
        modulus,
        ranks,
        last,
        fixups,
    })
}

/// Primes `>= s` dividing the gcd of some pairwise rank difference.
pub fn required_fixup_primes(fam: &ColumnFamily) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 0..fam.ranks.len() {
        for j in 0..i {
            let g = fam.ranks[i]
                .iter()
                .zip(&fam.ranks[j])
                .fold(BigInt::zero(), |g, (a, b)| g.gcd(&(a - b)));
            for p in prime_factors(&g) {
                if p >= BigInt::from(fam.s) {
                    out.push(p.to_u64().expect("fixup prime fits in 64 bits"));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Family for `s` columns with all needed fixups applied.
pub fn build_complete_family(s: u64, d: usize) -> Result<ColumnFamily> {
    let bare = build_column_family(s, d, &[])?;
    let fix = required_fixup_primes(&bare);
    if fix.is_empty() {
        Ok(bare)
    } else {
        build_column_family(s, d, &fix)
    }
}

/// Picks `counts[i]` points in column `i`, column by column and bottom-up,
/// so that no chosen point lies strictly inside a segment joining two chosen
/// points of different columns.
pub fn select_points(fam: &ColumnFamily, counts: &[usize]) -> Vec<Vec<GridPoint>> {
    let mut chosen: Vec<(usize, GridPoint)> = Vec::new();
    let mut out = vec![Vec::new(); fam.len()];
    for (i, &want) in counts.iter().enumerate().take(fam.len()) {
        let (mut last, step) = fam.last_base(i);
        while out[i].len() < want {
            let c = fam.point(i, last.clone());
            if visible(&chosen, i, &c) {
                chosen.push((i, c.clone()));
                out[i].push(c);
            }
            last += &step;
        }
    }
    out
}

fn visible(chosen: &[(usize, GridPoint)], col: usize, c: &GridPoint) -> bool {
    for (x, (ca, a)) in chosen.iter().enumerate() {
        for (cb, b) in &chosen[x + 1..] {
            if ca != cb && on_segment(a, b, c, true) {
                return false;
            }
        }
    }
    for (ca, a) in chosen {
        if *ca == col {
            continue;
        }
        for (_, w) in chosen {
            if on_segment(c, a, w, true) {
                return false;
            }
        }
    }
    true
}

/// `n` mutually visible points in every column of the family.
pub fn select_visible_points(fam: &ColumnFamily, n: usize) -> Vec<Vec<GridPoint>> {
    select_points(fam, &vec![n; fam.len()])
}

/// Draws `g` with at most `q` lattice points per edge: color class `j` goes
/// to column `j` of the family for `q^d` columns.
pub fn locate_from_coloring(g: &Graph, c: &Coloring, q: u64, d: usize) -> Result<GridDrawing> {
    if q < 2 || d < 2 {
        return Err(Error::Precondition(format!(
            "need q >= 2 and d >= 2, got q={q}, d={d}"
        )));
    }
    if c.colors.len() != g.n() {
        return Err(Error::Input(format!(
            "coloring has {} entries for {} vertices",
            c.colors.len(),
            g.n()
        )));
    }
    if let Some((u, v)) = c.conflict(g) {
        return Err(Error::ImproperColoring(u, v));
    }
    let s = q
        .checked_pow(d as u32)
        .ok_or_else(|| Error::Precondition("q^d overflows".into()))?;
    let classes = c.classes();
    if classes.len() as u64 > s {
        return Err(Error::Precondition(format!(
            "color {} exceeds the {s} available columns",
            classes.len() - 1
        )));
    }
    let fam = build_complete_family(s, d)?;
    let counts: Vec<usize> = (0..s as usize)
        .map(|j| classes.get(j).map_or(0, Vec::len))
        .collect();
    let cols = select_points(&fam, &counts);
    let mut points = vec![GridPoint(Vec::new()); g.n()];
    for (j, class) in classes.iter().enumerate() {
        for (v, p) in class.iter().zip(&cols[j]) {
            points[*v] = p.clone();
        }
    }
    GridDrawing::with_dim(g.clone(), points, d)
}

/// Colors each vertex by its coordinates mod `q`, encoded lexicographically in `[0, q^d)`.
pub fn modular_coloring(dr: &GridDrawing, q: u64) -> Result<Coloring> {
    if q < 2 {
        return Err(Error::Precondition(format!(
            "q must be at least 2, got {q}"
        )));
    }
    let qb = BigInt::from(q);
    let colors = dr
        .points()
        .iter()
        .map(|p| {
            p.0.iter()
                .fold(BigInt::zero(), |acc, x| acc * &qb + x.mod_floor(&qb))
        })
        .map(|c| {
            c.to_usize()
                .ok_or_else(|| Error::Precondition("q^d does not fit in usize".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(colors))
}

/// Largest gcd of coordinate differences over pairs from different columns.
pub fn max_cross_gcd(cols: &[Vec<GridPoint>]) -> BigInt {
    let mut best = BigInt::zero();
    for i in 0..cols.len() {
        for j in 0..i {
            for a in &cols[i] {
                for b in &cols[j] {
                    let g = difference_gcd(a, b);
                    if g > best {
                        best = g;
                    }
                }
            }
        }
    }
    best
}

/// `floor(s^{1/d}) - 1`, the cross-column gcd bound.
pub fn cross_gcd_bound(s: u64, d: usize) -> u64 {
    let mut r = 1u64;
    while BigInt::from(r + 1).pow(d as u32) <= BigInt::from(s) {
        r += 1;
    }
    r - 1
}

impl ColumnFamily {
    /// Combined step of the last coordinate in column `i`.
    pub fn last_modulus(&self, i: usize) -> BigInt {
        self.last[i]
            .constraints
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(&c.modulus))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::{chromatic_number, dsatur_coloring};
    use crate::search::Budget;
    use crate::verify::{gp, is_valid_drawing};

    #[test]
    fn pattern_examples() {
        assert_eq!(pattern_term(2, 2, 2, 4).unwrap(), vec![0, 2]);
        assert_eq!(pattern_term(2, 2, 2, 8).unwrap(), vec![2, 0]);
        assert_eq!(pattern_term(2, 2, 2, 16).unwrap(), vec![0, 0]);
        let first: Vec<Vec<u64>> = (0..5).map(|i| pattern_term(2, 2, 2, i).unwrap()).collect();
        assert_eq!(
            first,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![0, 2]]
        );
        assert!(pattern_term(4, 1, 2, 0).is_err());
    }

    #[test]
    fn pattern_levels_agree() {
        for (p, e) in [(2u64, 2u32), (3, 2), (2, 3)] {
            let m = p.pow(e - 1);
            let lower_period = p.pow(2 * (e - 1));
            for i in 0..p.pow(2 * e) {
                let hi = pattern_term(p, e, 2, i).unwrap();
                let lo = pattern_term(p, e - 1, 2, i % lower_period).unwrap();
                let reduced: Vec<u64> = hi.iter().map(|x| x % m).collect();
                assert_eq!(reduced, lo);
            }
        }
    }

    #[test]
    fn example_family() {
        let fam = build_column_family(9, 2, &[]).unwrap();
        let ranks: Vec<i64> = fam.ranks.iter().map(|r| r[0].to_i64().unwrap()).collect();
        assert_eq!(ranks, vec![0, 420, 105, 385, 280, 196, 161, 281, 386]);
        assert_eq!(fam.modulus, BigInt::from(420));
        let col2: Vec<(i64, i64)> = fam.last[2]
            .constraints
            .iter()
            .map(|c| (c.residue.to_i64().unwrap(), c.modulus.to_i64().unwrap()))
            .collect();
        assert_eq!(col2, vec![(0, 4), (2, 3), (2, 5), (2, 7)]);
    }

    #[test]
    fn small_family() {
        let fam = build_column_family(4, 2, &[]).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(fam.modulus, BigInt::from(6));
        assert_eq!(fam.exponents, BTreeMap::from([(2, 1), (3, 1)]));
        assert!(build_column_family(9, 2, &[7]).is_err());
        assert!(build_column_family(9, 2, &[10]).is_err());
    }

    #[test]
    fn fixups_make_residues_distinct() {
        let bare = build_column_family(9, 2, &[]).unwrap();
        let fix = required_fixup_primes(&bare);
        assert!(fix.iter().all(|&p| p >= 9));
        let fam = build_column_family(9, 2, &fix).unwrap();
        for res in fam.fixups.values() {
            let mut r = res.clone();
            r.sort_unstable();
            r.dedup();
            assert_eq!(r.len(), 9);
        }
    }

    #[test]
    fn selected_points_respect_gcd_bound() {
        for (s, n) in [(4u64, 1usize), (4, 3), (9, 2), (9, 3)] {
            let fam = build_complete_family(s, 2).unwrap();
            let cols = select_visible_points(&fam, n);
            assert!(cols.iter().all(|c| c.len() == n));
            assert!(max_cross_gcd(&cols) <= BigInt::from(cross_gcd_bound(s, 2)));
            for c in &cols {
                assert!(c.windows(2).all(|w| w[0].last() < w[1].last()));
            }
        }
    }

    #[test]
    fn multipartite_drawings() {
        let fam = build_complete_family(9, 2).unwrap();
        let cols = select_visible_points(&fam, 2);
        let g = corpus::complete_multipartite(&[2; 9]);
        let pts: Vec<GridPoint> = cols.into_iter().flatten().collect();
        let dr = GridDrawing::new(g, pts).unwrap();
        assert!(is_valid_drawing(&dr));
        assert!(gp(&dr) <= BigInt::from(3));

        let fam = build_complete_family(4, 2).unwrap();
        let pts: Vec<GridPoint> = select_visible_points(&fam, 3)
            .into_iter()
            .flatten()
            .collect();
        let g = corpus::complete_multipartite(&[3; 4]);
        let dr = GridDrawing::new(g.clone(), pts).unwrap();
        assert!(is_valid_drawing(&dr));
        assert!(modular_coloring(&dr, 2).unwrap().is_proper(&g));
    }

    #[test]
    fn k5_three_locatable() {
        let g = corpus::complete(5);
        let c = Coloring::new((0..5).collect());
        let dr = locate_from_coloring(&g, &c, 3, 2).unwrap();
        assert!(is_valid_drawing(&dr));
        assert!(gp(&dr) <= BigInt::from(3));
        assert_eq!(crate::verify::column_ranks(&dr).len(), 5);
        let m = modular_coloring(&dr, 3).unwrap();
        assert!(m.is_proper(&g) && m.num_colors() <= 9);
    }

    #[test]
    fn k9_and_edge() {
        let g = corpus::complete(9);
        let dr = locate_from_coloring(&g, &Coloring::new((0..9).collect()), 3, 2).unwrap();
        assert!(is_valid_drawing(&dr) && gp(&dr) <= BigInt::from(3));
        assert_eq!(crate::verify::column_ranks(&dr).len(), 9);
        let e = corpus::complete(2);
        let dr = locate_from_coloring(&e, &Coloring::new(vec![0, 1]), 2, 2).unwrap();
        assert_eq!(gp(&dr), BigInt::from(2));
    }

    #[test]
    fn rejects_bad_colorings() {
        let g = corpus::complete(3);
        assert!(matches!(
            locate_from_coloring(&g, &Coloring::new(vec![0, 0, 1]), 2, 2),
            Err(Error::ImproperColoring(0, 1))
        ));
        let k5 = corpus::complete(5);
        assert!(locate_from_coloring(&k5, &Coloring::new((0..5).collect()), 2, 2).is_err());
    }

    #[test]
    fn modular_examples() {
        let dr = GridDrawing::new(
            corpus::complete(2),
            vec![GridPoint::from_i64(&[0, 0]), GridPoint::from_i64(&[1, 2])],
        )
        .unwrap();
        assert_eq!(modular_coloring(&dr, 2).unwrap().colors, vec![0, 2]);
        let dr = GridDrawing::new(
            corpus::complete(2),
            vec![GridPoint::from_i64(&[0, 0]), GridPoint::from_i64(&[2, 2])],
        )
        .unwrap();
        assert_eq!(modular_coloring(&dr, 2).unwrap().colors, vec![0, 0]);
    }

    #[test]
    fn round_trip_on_random_graphs() {
        let mut rng = corpus::rng(5);
        for _ in 0..6 {
            let g = corpus::random_gnp(8, 0.4, &mut rng);
            let (k, c) = chromatic_number(&g, &Budget::default()).unwrap();
            if k > 4 {
                continue;
            }
            let dr = locate_from_coloring(&g, &c, 2, 2).unwrap();
            assert!(is_valid_drawing(&dr) && gp(&dr) <= BigInt::from(2));
            assert!(modular_coloring(&dr, 2).unwrap().is_proper(&g));
            let d = dsatur_coloring(&g);
            if d.num_colors() <= 8 {
                let dr = locate_from_coloring(&g, &d, 2, 3).unwrap();
                assert!(is_valid_drawing(&dr) && gp(&dr) <= BigInt::from(2));
            }
        }
    }
}
