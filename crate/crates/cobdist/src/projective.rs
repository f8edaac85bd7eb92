//! Projectivization of finitely generated abelian groups.
//!
//! Two nonzero elements are one-step related when they are integer multiples
//! of a common element; the projective space is the quotient by the
//! equivalence relation this generates. Canonical class forms:
//!
//! * non-torsion elements map to the gcd-reduced, sign-normalized free part
//!   (torsion summands never separate classes);
//! * if the torsion carries two distinct primes, all torsion elements fall in
//!   a single class;
//! * in a p-primary torsion group, classes biject with lines of the
//!   order-p bottom layer, a vector space over the field with p elements.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::Error;

/// `Z^rank + Z_{q_1} + ... + Z_{q_s}` with every `q_i` a prime power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FgGroup {
    rank: usize,
    torsion: Vec<u64>,
    primes: Vec<u64>,
}

fn prime_power_base(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let mut p = 0u64;
    let mut rest = q;
    let mut d = 2u64;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            p = d;
            while rest.is_multiple_of(d) {
                rest /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some(q); // q itself is prime
    }
    if rest == 1 {
        Some(p)
    } else {
        None
    }
}

impl FgGroup {
    pub fn new(rank: usize, torsion: Vec<u64>) -> Result<Self, Error> {
        let primes = torsion
            .iter()
            .map(|q| prime_power_base(*q))
            .collect::<Option<Vec<u64>>>()
            .ok_or(Error::BadElement("torsion orders must be prime powers > 1"))?;
        Ok(FgGroup {
            rank,
            torsion,
            primes,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Lcm of the torsion orders (1 for torsion-free groups).
    pub fn exponent(&self) -> u64 {
        self.torsion.iter().fold(1u64, |e, q| e.lcm(q))
    }

    fn distinct_primes(&self) -> Vec<u64> {
        let mut ps = self.primes.clone();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    pub fn element(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<GroupElement, Error> {
        if free.len() != self.rank || torsion.len() != self.torsion.len() {
            return Err(Error::BadElement(
                "coordinate counts must match the group shape",
            ));
        }
        let torsion = torsion
            .iter()
            .zip(&self.torsion)
            .map(|(v, q)| v.rem_euclid(*q as i64) as u64)
            .collect();
        Ok(GroupElement { free, torsion })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            free: vec![0; self.rank],
            torsion: vec![0; self.torsion.len()],
        }
    }

    /// All elements of a finite (rank 0) group.
    pub fn elements(&self) -> Vec<GroupElement> {
        assert_eq!(self.rank, 0, "element enumeration needs a finite group");
        let mut out = vec![self.zero()];
        for (i, q) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (*q as usize));
            for e in &out {
                for r in 0..*q {
                    let mut e2 = e.clone();
                    e2.torsion[i] = r;
                    next.push(e2);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for FgGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for q in &self.torsion {
            parts.push(format!("Z{q}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Element of an [`FgGroup`]: free coordinates, then residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub free: Vec<i64>,
    pub torsion: Vec<u64>,
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|v| *v == 0) && self.torsion.iter().all(|v| *v == 0)
    }

    pub fn is_torsion(&self) -> bool {
        self.free.iter().all(|v| *v == 0)
    }

    pub fn scale(&self, r: i64, g: &FgGroup) -> GroupElement {
        GroupElement {
            free: self.free.iter().map(|v| v * r).collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&g.torsion)
                .map(|(v, q)| ((i128::from(r) * i128::from(*v)).rem_euclid(i128::from(*q))) as u64)
                .collect(),
        }
    }

    pub fn add(&self, other: &GroupElement, g: &FgGroup) -> GroupElement {
        GroupElement {
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a + b)
                .collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .zip(&g.torsion)
                .map(|((a, b), q)| (a + b) % q)
                .collect(),
        }
    }

    /// Order of a torsion element (lcm of coordinate orders).
    fn torsion_order(&self, g: &FgGroup) -> u64 {
        self.torsion
            .iter()
            .zip(&g.torsion)
            .fold(1u64, |o, (v, q)| o.lcm(&(q / q.gcd(v))))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(|v| v.to_string()).collect();
        let tor: Vec<String> = self.torsion.iter().map(|v| v.to_string()).collect();
        write!(f, "({};{})", free.join(","), tor.join(","))
    }
}

/// Canonical projective class label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProjClass {
    /// The adjoined basepoint: class of the zero element only.
    Star,
    /// Class of a non-torsion element: primitive free part, first nonzero
    /// coordinate positive.
    Free(Vec<i64>),
    /// Class of a torsion element in a p-primary group: normalized line in
    /// the order-p layer, first nonzero coordinate 1.
    TorsionLine { p: u64, line: Vec<u64> },
    /// The single torsion class of a group whose torsion mixes two primes.
    MixedTorsion,
}

impl fmt::Display for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjClass::Star => write!(f, "*"),
            ProjClass::Free(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "free[{}]", s.join(","))
            }
            ProjClass::TorsionLine { p, line } => {
                let s: Vec<String> = line.iter().map(|x| x.to_string()).collect();
                write!(f, "line_p{p}[{}]", s.join(","))
            }
            ProjClass::MixedTorsion => write!(f, "torsion"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u64
}

/// Canonical class of `x` in `g`.
pub fn canonicalize(g: &FgGroup, x: &GroupElement) -> ProjClass {
    if x.is_zero() {
        return ProjClass::Star;
    }
    if !x.is_torsion() {
        let gcd = x.free.iter().fold(0i64, |a, v| a.gcd(v));
        let sign = x.free.iter().find(|v| **v != 0).map_or(1, |v| v.signum());
        return ProjClass::Free(x.free.iter().map(|v| v / (gcd * sign)).collect());
    }
    let primes = g.distinct_primes();
    if primes.len() >= 2 {
        return ProjClass::MixedTorsion;
    }
    let p = primes[0];
    // Project to the bottom layer: the least multiple of x killed by p.
    let ord = x.torsion_order(g);
    let y = x.scale((ord / p) as i64, g);
    let mut line: Vec<u64> = y
        .torsion
        .iter()
        .zip(&g.torsion)
        .map(|(v, q)| v / (q / p))
        .collect();
    let lead = *line
        .iter()
        .find(|v| **v != 0)
        .expect("nonzero bottom layer");
    let inv = mod_inverse(lead, p);
    for v in &mut line {
        *v = (*v * inv) % p;
    }
    ProjClass::TorsionLine { p, line }
}

/// Does `r * m == x` hold for some integer `r`?
fn is_multiple_of(g: &FgGroup, m: &GroupElement, x: &GroupElement) -> bool {
    if let Some(i) = m.free.iter().position(|v| *v != 0) {
        if x.free[i] % m.free[i] != 0 {
            return false;
        }
        let r = x.free[i] / m.free[i];
        return m.scale(r, g) == *x;
    }
    if !x.is_torsion() {
        return false;
    }
    let e = g.exponent();
    (0..e).any(|r| m.scale(r as i64, g) == *x)
}

/// One step of the projective relation: `x` and `y` are both integer
/// multiples of a common element `m`. Decided by bounded search, with the
/// free coordinates of `m` confined to the divisor box of `x` and `y`.
pub fn related_one_step(g: &FgGroup, x: &GroupElement, y: &GroupElement) -> bool {
    if x.is_zero() || y.is_zero() {
        return false;
    }
    let bound = x
        .free
        .iter()
        .chain(&y.free)
        .map(|v| v.abs())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut m = g.zero();
    search_box(g, &mut m, 0, bound, &mut |m| {
        !m.is_zero() && is_multiple_of(g, m, x) && is_multiple_of(g, m, y)
    })
}

fn search_box(
    g: &FgGroup,
    m: &mut GroupElement,
    coord: usize,
    bound: i64,
    pred: &mut impl FnMut(&GroupElement) -> bool,
) -> bool {
    let total = g.rank + g.torsion.len();
    if coord == total {
        return pred(m);
    }
    if coord < g.rank {
        for v in -bound..=bound {
            m.free[coord] = v;
            if search_box(g, m, coord + 1, bound, pred) {
                return true;
            }
        }
        m.free[coord] = 0;
    } else {
        let i = coord - g.rank;
        for v in 0..g.torsion[i] {
            m.torsion[i] = v;
            if search_box(g, m, coord + 1, bound, pred) {
                return true;
            }
        }
        m.torsion[i] = 0;
    }
    false
}

/// Projective equivalence, decided through canonical forms.
pub fn equivalent(g: &FgGroup, x: &GroupElement, y: &GroupElement) -> bool {
    canonicalize(g, x) == canonicalize(g, y)
}

/// Number of projective classes of a finite group.
pub fn class_count(g: &FgGroup) -> Result<u64, Error> {
    if g.rank > 0 {
        return Err(Error::InfiniteGroup(g.rank));
    }
    let primes = g.distinct_primes();
    match primes.len() {
        0 => Ok(0),
        1 => {
            let p = primes[0] as u128;
            let s = g.torsion.len() as u32;
            Ok(((p.pow(s) - 1) / (p - 1)) as u64)
        }
        _ => Ok(1),
    }
}

/// Integers `(a, b)` with `a*x == b*y != 0`, when `x` and `y` are equivalent
/// non-torsion elements; `None` for torsion or inequivalent inputs.
pub fn common_multiple_witness(
    g: &FgGroup,
    x: &GroupElement,
    y: &GroupElement,
) -> Option<(i64, i64)> {
    if x.is_torsion() || y.is_torsion() || !equivalent(g, x, y) {
        return None;
    }
    let gx = x.free.iter().fold(0i64, |a, v| a.gcd(v));
    let gy = y.free.iter().fold(0i64, |a, v| a.gcd(v));
    let bound = (g.exponent() as i64) * gx.lcm(&gy);
    for k in 1..=bound {
        let mut pairs: Vec<(i64, i64)> = Vec::new();
        for a in [k, -k] {
            for b in -k..=k {
                pairs.push((a, b));
            }
        }
        for b in [k, -k] {
            for a in -(k - 1)..=(k - 1) {
                pairs.push((a, b));
            }
        }
        pairs.sort_by_key(|(a, b)| (a.abs(), b.abs(), *a < 0, *b < 0));
        for (a, b) in pairs {
            if a == 0 || b == 0 {
                continue;
            }
            let ax = x.scale(a, g);
            if !ax.is_zero() && ax == y.scale(b, g) {
                return Some((a, b));
            }
        }
    }
    None
}
