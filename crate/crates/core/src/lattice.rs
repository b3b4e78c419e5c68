//! Exact number theory on integer lattices: lattice points on segments,
//! primitivity, residue systems and the Chinese remainder theorem.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of `Z^d` with unbounded coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint(pub Vec<BigInt>);

impl GridPoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        GridPoint(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        GridPoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    /// Column rank: all coordinates but the last.
    pub fn rank(&self) -> &[BigInt] {
        &self.0[..self.0.len().saturating_sub(1)]
    }

    pub fn last(&self) -> &BigInt {
        self.0
            .last()
            .expect("grid points have at least one coordinate")
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for GridPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.0.iter().map(BigInt::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| de::Error::custom(format!("bad integer {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(GridPoint)
    }
}

fn same_dim(a: &GridPoint, b: &GridPoint) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// gcd of the absolute coordinate differences.
pub fn difference_gcd(a: &GridPoint, b: &GridPoint) -> BigInt {
    a.0.iter()
        .zip(&b.0)
        .fold(BigInt::zero(), |g, (x, y)| g.gcd(&(x - y)))
}

/// All lattice points of the closed segment `a`-`b`, ordered from `a` to `b`.
pub fn segment_lattice_points(a: &GridPoint, b: &GridPoint) -> Result<Vec<GridPoint>> {
    same_dim(a, b)?;
    if a == b {
        return Err(Error::DegenerateSegment(a.to_string()));
    }
    let g = difference_gcd(a, b);
    let step: Vec<BigInt> = a.0.iter().zip(&b.0).map(|(x, y)| (y - x) / &g).collect();
    let count = g.to_usize().ok_or_else(|| {
        Error::Precondition(format!(
            "segment {a}-{b} has too many lattice points to list"
        ))
    })?;
    Ok((0..=count)
        .map(|j| {
            let j = BigInt::from(j);
            GridPoint(a.0.iter().zip(&step).map(|(x, s)| x + &j * s).collect())
        })
        .collect())
}

/// Number of lattice points on the closed segment, `gcd + 1`.
pub fn segment_point_count(a: &GridPoint, b: &GridPoint) -> Result<BigInt> {
    same_dim(a, b)?;
    if a == b {
        return Err(Error::DegenerateSegment(a.to_string()));
    }
    Ok(difference_gcd(a, b) + 1)
}

pub fn is_primitive(a: &GridPoint, b: &GridPoint) -> Result<bool> {
    Ok(segment_point_count(a, b)? == BigInt::from(2))
}

/// Whether `p` lies on the segment `a`-`b`; with `open` the endpoints are excluded.
pub fn on_segment(a: &GridPoint, b: &GridPoint, p: &GridPoint, open: bool) -> bool {
    let d = a.dim();
    if open && (p == a || p == b) {
        return false;
    }
    let ab: Vec<BigInt> = (0..d).map(|i| &b.0[i] - &a.0[i]).collect();
    let ap: Vec<BigInt> = (0..d).map(|i| &p.0[i] - &a.0[i]).collect();
    // Parallel: every 2x2 minor vanishes. Pivot on a nonzero coordinate of ab.
    let Some(k) = ab.iter().position(|x| !x.is_zero()) else {
        return p == a;
    };
    for i in 0..d {
        if i != k && &ap[i] * &ab[k] != &ap[k] * &ab[i] {
            return false;
        }
    }
    // 0 <= t <= 1 with t = ap[k] / ab[k]
    let (t, s) = (&ap[k], &ab[k]);
    if s.is_positive() {
        !t.is_negative() && t <= s
    } else {
        !t.is_positive() && t >= s
    }
}

/// One congruence `x = residue (mod modulus)` with `modulus >= 2` and `0 <= residue < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Congruence {
    #[serde(with = "bigint_string")]
    pub modulus: BigInt,
    #[serde(with = "bigint_string")]
    pub residue: BigInt,
}

impl Congruence {
    /// Reduces the residue into `[0, modulus)`.
    pub fn new(modulus: impl Into<BigInt>, residue: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::Precondition(format!(
                "modulus {modulus} must be at least 2"
            )));
        }
        let residue = residue.into().mod_floor(&modulus);
        Ok(Congruence { modulus, residue })
    }

    pub fn holds(&self, x: &BigInt) -> bool {
        x.mod_floor(&self.modulus) == self.residue
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueSystem {
    pub constraints: Vec<Congruence>,
}

impl ResidueSystem {
    pub fn new(constraints: Vec<Congruence>) -> Self {
        ResidueSystem { constraints }
    }

    pub fn push(&mut self, c: Congruence) {
        self.constraints.push(c);
    }

    pub fn holds(&self, x: &BigInt) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }
}

/// Smallest nonnegative solution together with the combined modulus (the lcm).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtSolution {
    pub value: BigInt,
    pub modulus: BigInt,
}

fn compatible(a: &Congruence, b: &Congruence) -> bool {
    let g = a.modulus.gcd(&b.modulus);
    (&a.residue - &b.residue).mod_floor(&g).is_zero()
}

/// Solves a residue system. Moduli need not be coprime; shared factors must agree.
pub fn crt_solve(rs: &ResidueSystem) -> Result<CrtSolution> {
    let mut value = BigInt::zero();
    let mut modulus = BigInt::one();
    for (i, c) in rs.constraints.iter().enumerate() {
        let eg = modulus.extended_gcd(&c.modulus);
        let g = eg.gcd;
        let diff = &c.residue - &value;
        if !diff.mod_floor(&g).is_zero() {
            let j = rs.constraints[..i]
                .iter()
                .position(|other| !compatible(other, c))
                .expect("a pairwise conflict exists for an inconsistent system");
            let other = &rs.constraints[j];
            return Err(Error::Infeasible {
                r1: other.residue.to_string(),
                m1: other.modulus.to_string(),
                r2: c.residue.to_string(),
                m2: c.modulus.to_string(),
            });
        }
        // value + modulus * t = residue (mod c.modulus)
        let step = &c.modulus / &g;
        let t = ((&diff / &g) * &eg.x).mod_floor(&step);
        value += &modulus * t;
        modulus *= &step;
        value = value.mod_floor(&modulus);
    }
    Ok(CrtSolution { value, modulus })
}

/// All primes `< bound`, ascending.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound < 3 {
        return Vec::new();
    }
    let size = bound as usize;
    let mut composite = vec![false; size];
    let mut out = Vec::new();
    for i in 2..size {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < size {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `|n|` by trial division, ascending. Zero has none.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    if let Some(mut m) = n.to_u64() {
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                out.push(BigInt::from(d));
                while m % d == 0 {
                    m /= d;
                }
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            out.push(BigInt::from(m));
        }
        return out;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            while (&n % &d).is_zero() {
                n /= &d;
            }
            out.push(d.clone());
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Serde adapter for unbounded integers as decimal strings.
pub mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse()
            .map_err(|_| de::Error::custom(format!("bad integer {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> GridPoint {
        GridPoint::from_i64(c)
    }

    fn to_i64(points: &[GridPoint]) -> Vec<Vec<i64>> {
        points
            .iter()
            .map(|q| q.0.iter().map(|c| c.to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn segment_examples() {
        assert_eq!(
            segment_lattice_points(&p(&[0, 0]), &p(&[1, 1]))
                .unwrap()
                .len(),
            2
        );
        let pts = segment_lattice_points(&p(&[0, 0]), &p(&[4, 6])).unwrap();
        assert_eq!(to_i64(&pts), vec![vec![0, 0], vec![2, 3], vec![4, 6]]);
        let pts = segment_lattice_points(&p(&[1, 2]), &p(&[1, 5])).unwrap();
        assert_eq!(
            to_i64(&pts),
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 5]]
        );
        assert!(matches!(
            segment_lattice_points(&p(&[3, 3]), &p(&[3, 3])),
            Err(Error::DegenerateSegment(_))
        ));
        assert!(matches!(
            segment_lattice_points(&p(&[0, 0]), &p(&[1, 1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&p(&[0, 0]), &p(&[2, 3])).unwrap());
        assert!(!is_primitive(&p(&[0, 0]), &p(&[2, 2])).unwrap());
        assert!(is_primitive(&p(&[0, 0, 0]), &p(&[6, 10, 15])).unwrap());
    }

    #[test]
    fn segment_matches_scan_on_small_box() {
        let range = -4..=4;
        let pts: Vec<[i64; 2]> = range
            .clone()
            .flat_map(|x| range.clone().map(move |y| [x, y]))
            .collect();
        for a in &pts {
            for b in &pts {
                if a == b {
                    continue;
                }
                let got = to_i64(&segment_lattice_points(&p(a), &p(b)).unwrap());
                let mut got_sorted = got.clone();
                got_sorted.sort();
                let mut want = oracle::segment_points_scan(a, b);
                want.sort();
                assert_eq!(got_sorted, want);
                assert_eq!(got.first().unwrap(), &a.to_vec());
                assert_eq!(got.last().unwrap(), &b.to_vec());
            }
        }
    }

    fn congruences(pairs: &[(i64, i64)]) -> ResidueSystem {
        ResidueSystem::new(
            pairs
                .iter()
                .map(|&(m, r)| Congruence::new(m, r).unwrap())
                .collect(),
        )
    }

    #[test]
    fn crt_examples() {
        let s = crt_solve(&congruences(&[(4, 0), (3, 1), (5, 0), (7, 0)])).unwrap();
        assert_eq!((s.value, s.modulus), (BigInt::from(280), BigInt::from(420)));
        let s = crt_solve(&congruences(&[(4, 1), (3, 2), (5, 1), (7, 1)])).unwrap();
        assert_eq!((s.value, s.modulus), (BigInt::from(281), BigInt::from(420)));
        let s = crt_solve(&congruences(&[(2, 0)])).unwrap();
        assert_eq!((s.value, s.modulus), (BigInt::from(0), BigInt::from(2)));
    }

    #[test]
    fn crt_merges_compatible_prime_powers() {
        let s = crt_solve(&congruences(&[(4, 3), (8, 7), (3, 2)])).unwrap();
        assert_eq!((s.value, s.modulus), (BigInt::from(23), BigInt::from(24)));
    }

    #[test]
    fn crt_reports_the_conflicting_pair() {
        let err = crt_solve(&congruences(&[(3, 1), (4, 1), (8, 2)])).unwrap_err();
        match err {
            Error::Infeasible { r1, m1, r2, m2 } => {
                assert_eq!((r1.as_str(), m1.as_str()), ("1", "4"));
                assert_eq!((r2.as_str(), m2.as_str()), ("2", "8"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn primes_examples() {
        assert_eq!(primes_below(9), vec![2, 3, 5, 7]);
        assert_eq!(primes_below(2), Vec::<u64>::new());
        let trial: Vec<u64> = (0..30).filter(|&n| oracle::is_prime(n)).collect();
        assert_eq!(primes_below(30), trial);
        assert_eq!(primes_below(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn factors() {
        let f: Vec<i64> = prime_factors(&BigInt::from(-360))
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect();
        assert_eq!(f, vec![2, 3, 5]);
        assert!(prime_factors(&BigInt::zero()).is_empty());
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64) * 4;
        assert_eq!(prime_factors(&big).len(), 3);
    }

    #[test]
    fn point_json_is_decimal_strings() {
        let q = GridPoint::new(vec![BigInt::from(420), BigInt::from(17)]);
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["420","17"]"#);
        let back: GridPoint = serde_json::from_str(r#"["420","17"]"#).unwrap();
        assert_eq!(back, q);
    }

    proptest! {
        #[test]
        fn crt_solution_satisfies_system(
            pairs in proptest::collection::vec((2i64..40, 0i64..1000), 1..5),
            x in 0i64..100_000,
        ) {
            // Build a consistent system from a hidden solution x.
            let rs = congruences(&pairs.iter().map(|&(m, _)| (m, x)).collect::<Vec<_>>());
            let s = crt_solve(&rs).unwrap();
            prop_assert!(rs.holds(&s.value));
            prop_assert!(!s.value.is_negative() && s.value < s.modulus);
            prop_assert!(rs.holds(&(&s.value + &s.modulus)));
            prop_assert!(rs.holds(&BigInt::from(x)));
            let lcm = pairs.iter().fold(BigInt::one(), |l, &(m, _)| l.lcm(&BigInt::from(m)));
            prop_assert_eq!(s.modulus, lcm);
        }

        #[test]
        fn primitive_iff_two_points(a in proptest::collection::vec(-6i64..6, 3), b in proptest::collection::vec(-6i64..6, 3)) {
            prop_assume!(a != b);
            let (pa, pb) = (p(&a), p(&b));
            let pts = segment_lattice_points(&pa, &pb).unwrap();
            prop_assert_eq!(is_primitive(&pa, &pb).unwrap(), pts.len() == 2);
            prop_assert_eq!(pts.len() as i64, oracle::lattice_count(&a, &b));
        }
    }
}
