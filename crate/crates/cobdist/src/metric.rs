//! The projective pseudo-metric `delta` and chain metric `Delta`.
//!
//! For primitive classes `[x]`, `[y]` in the span of 2-stranded torus knots,
//! `delta([x],[y])` is the least cobordism distance between any nonzero
//! multiples of the two classes. Signature evaluations are additive,
//! integer-valued lower bounds for the four-genus and vanish on torsion, so
//! they bound `delta` on the full projective classes; surgery schemas and the
//! closed forms provide upper bounds. The candidate multiplier region is
//! finite and certified: any pair outside it is excluded by an explicit
//! signature evaluation exceeding the seed upper bound.
//!
//! `Delta` is the chain metric: the least total of certified `delta` values
//! along a chain of classes. A finite universe of intermediate classes yields
//! certified upper bounds; lower bounds stop at 2 unless `delta` is exactly
//! 1 or 2, which pin `Delta` exactly.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::exactnum::{rat, Rational, StepFunction};
use crate::genus::{closed_form_upper, g4_interval, UpperWitness};
use crate::knots::{combo_signature, double_floor, torus_pair_combo, Generator, KnotCombo};
use crate::Error;

/// A primitive class representative: a torus-span combination together with
/// an additive integer-valued functional `nu` (an integer combination of
/// signature evaluations) taking the value 1 on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassNode {
    combo: KnotCombo,
    witness: Vec<(Rational, i64)>,
}

impl ClassNode {
    pub fn new(combo: KnotCombo) -> Result<Self, Error> {
        let sig = combo_signature(&combo)?;
        let witness = primitivity_witness(&sig)?;
        Ok(ClassNode { combo, witness })
    }

    pub fn torus(m: u32) -> Result<Self, Error> {
        ClassNode::new(KnotCombo::single(Generator::torus(m)?))
    }

    pub fn combo(&self) -> &KnotCombo {
        &self.combo
    }

    /// Evaluation points (right limits) and integer coefficients of `nu`.
    pub fn witness(&self) -> &[(Rational, i64)] {
        &self.witness
    }

    /// Apply the functional to another torus-span combination.
    pub fn nu(&self, other: &KnotCombo) -> Result<i64, Error> {
        let sig = combo_signature(other)?;
        Ok(self
            .witness
            .iter()
            .map(|(t, c)| c * sig.limit_right(t))
            .sum())
    }

    pub fn label(&self) -> String {
        self.combo.to_string()
    }

    fn same_class(&self, other: &ClassNode) -> bool {
        self.combo.primitive().0 == other.combo.primitive().0
    }
}

/// Build `nu` by running the extended gcd over the interval values of the
/// signature; the values of a combination generate the same ideal as its
/// coefficients, so a primitive combination always yields gcd 1.
fn primitivity_witness(sig: &StepFunction) -> Result<Vec<(Rational, i64)>, Error> {
    let values = sig.interval_values();
    let mut g: i64 = 0;
    let mut coeffs: Vec<(usize, i64)> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        if *v == 0 {
            continue;
        }
        let (g2, x, y) = egcd(g, *v);
        for (_, c) in coeffs.iter_mut() {
            *c *= x;
        }
        coeffs.push((i, y));
        g = g2;
        if g == 1 {
            break;
        }
    }
    if g != 1 {
        return Err(Error::NotPrimitive { gcd: g.abs() });
    }
    let points: Vec<(Rational, i64)> = coeffs
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(i, c)| {
            let t = if i == 0 {
                rat(0, 1)
            } else {
                sig.breakpoints()[i - 1].clone()
            };
            (t, c)
        })
        .collect();
    debug_assert_eq!(
        points
            .iter()
            .map(|(t, c)| c * sig.limit_right(t))
            .sum::<i64>(),
        1
    );
    Ok(points)
}

/// Extended gcd: returns `(g, x, y)` with `g = x*a + y*b`, `g >= 0`.
fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Machine-checkable provenance of a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// The two inputs represent the same projective class.
    SameClass,
    /// `|signature|` of the multiple pair `a*x - b*y` at the given point;
    /// together with the candidate-region bounds this certifies the lower
    /// bound over all nonzero multiples.
    SignaturePoint {
        pair: (i64, i64),
        at: String,
        value: i64,
    },
    /// Surgery schema with this many curves for the multiple pair.
    Schema { pair: (i64, i64), curves: u32 },
    /// Closed-form four-genus bound for the multiple pair.
    ClosedForm { pair: (i64, i64) },
    /// Seifert-genus bound for the multiple pair.
    Seifert { pair: (i64, i64) },
    /// Chain of classes, summing certified exact `delta` values.
    Chain { nodes: Vec<String> },
    /// Geometric fact imported as an axiom, never recomputed.
    Axiom { note: String },
    /// No certified bound within the supplied universe.
    Unbounded,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::SameClass => "same-class",
            Certificate::SignaturePoint { .. } => "signature-point",
            Certificate::Schema { .. } => "schema",
            Certificate::ClosedForm { .. } => "closed-form",
            Certificate::Seifert { .. } => "seifert",
            Certificate::Chain { .. } => "chain",
            Certificate::Axiom { .. } => "axiom",
            Certificate::Unbounded => "unbounded",
        }
    }
}

/// Certified interval for a projective distance.
#[derive(Clone, Debug, Serialize)]
pub struct DistInterval {
    pub lower: u32,
    pub upper: Option<u32>,
    pub lower_cert: Certificate,
    pub upper_cert: Certificate,
}

impl DistInterval {
    pub fn exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    pub fn is_exactly(&self, v: u32) -> bool {
        self.lower == v && self.upper == Some(v)
    }

    fn same_class() -> Self {
        DistInterval {
            lower: 0,
            upper: Some(0),
            lower_cert: Certificate::SameClass,
            upper_cert: Certificate::SameClass,
        }
    }
}

fn upper_cert_for(pair: (i64, i64), witness: &UpperWitness) -> Certificate {
    match witness {
        UpperWitness::Schema(s) => Certificate::Schema {
            pair,
            curves: s.total_curves(),
        },
        UpperWitness::ClosedForm { .. } => Certificate::ClosedForm { pair },
        UpperWitness::Seifert => Certificate::Seifert { pair },
    }
}

/// One evaluated candidate pair of [`dbar_search`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DbarCandidate {
    pub b: i64,
    pub a: i64,
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
}

/// Result of minimizing `g4(b*T(2,2n+1) - a*T(2,2k+1))` over all nonzero
/// multipliers.
#[derive(Clone, Debug, Serialize)]
pub struct DbarResult {
    pub k: u32,
    pub n: u32,
    /// Least certified-exact four-genus over the candidate region.
    pub value: u32,
    /// All `(b, a)` attaining it exactly.
    pub argmins: Vec<(i64, i64)>,
    /// True when no candidate could lie below `value`.
    pub all_certified: bool,
    /// Seed upper bound from the closed forms.
    pub upper_seed: u32,
    /// Signature count just below `1/(2k+1)`, the per-`b` exclusion slope.
    pub first_jump_count: i64,
    pub candidates: Vec<DbarCandidate>,
}

fn ceil_div(x: i64, y: i64) -> i64 {
    debug_assert!(y > 0);
    x.div_euclid(y) + i64::from(x.rem_euclid(y) != 0)
}

/// Search the finite certified region for the minimum of
/// `g4(b*T(2,2n+1) - a*T(2,2k+1))` over nonzero integers `a`, `b`.
///
/// With `V0` the best closed-form value: any same-sign pair below `V0` must
/// satisfy `b * J1 <= V0` (signature just below `1/(2k+1)`) and
/// `|bn - ak| <= V0` (signature at 1); any opposite-sign pair must satisfy
/// `bn + ak <= V0`. Every excluded pair therefore carries a signature
/// evaluation above `V0`.
pub fn dbar_search(k: u32, n: u32) -> Result<DbarResult, Error> {
    let (at_alpha, at_next) = closed_form_upper(k, n)?;
    let v0 = at_next.map_or(at_alpha, |v| v.min(at_alpha));
    let x = rat(2 * i64::from(n) + 1, 2 * (2 * i64::from(k) + 1)) + rat(1, 2);
    let j1 = double_floor(&x).to_i64().expect("small jump count");
    debug_assert!(j1 >= 1);

    let (k64, n64, v64) = (i64::from(k), i64::from(n), i64::from(v0));
    let mut candidates = Vec::new();
    let mut b = 1i64;
    while b * j1 <= v64 {
        let lo = ceil_div(b * n64 - v64, k64).max(1);
        let hi = (b * n64 + v64).div_euclid(k64);
        for a in lo..=hi {
            let interval = g4_interval(&torus_pair_combo(k, n, a, b)?)?;
            candidates.push(DbarCandidate {
                b,
                a,
                lower: interval.lower,
                upper: interval.upper,
                exact: interval.exact(),
            });
        }
        b += 1;
    }
    let mut b = 1i64;
    while b * n64 + k64 <= v64 {
        let mut a_mag = 1i64;
        while b * n64 + a_mag * k64 <= v64 {
            let mut combo = KnotCombo::new();
            combo.insert(Generator::torus(n)?, b);
            combo.insert(Generator::torus(k)?, a_mag);
            let interval = g4_interval(&combo)?;
            candidates.push(DbarCandidate {
                b,
                a: -a_mag,
                lower: interval.lower,
                upper: interval.upper,
                exact: interval.exact(),
            });
            a_mag += 1;
        }
        b += 1;
    }

    let value = candidates
        .iter()
        .filter(|c| c.exact)
        .map(|c| c.upper)
        .min()
        .expect("the floor multiplier candidate is always exact");
    let argmins: Vec<(i64, i64)> = candidates
        .iter()
        .filter(|c| c.exact && c.upper == value)
        .map(|c| (c.b, c.a))
        .collect();
    let all_certified = candidates.iter().all(|c| c.exact || c.lower >= value);
    Ok(DbarResult {
        k,
        n,
        value,
        argmins,
        all_certified,
        upper_seed: v0,
        first_jump_count: j1,
        candidates,
    })
}

/// Both signatures evaluated on the common refinement of their breakpoints,
/// one value per interval (the last interval covers `t = 1`).
fn refined_values(f: &StepFunction, g: &StepFunction) -> (Vec<i64>, Vec<i64>) {
    let mut u = vec![f.interval_values()[0]];
    let mut w = vec![g.interval_values()[0]];
    let (mut i, mut j) = (0usize, 0usize);
    let (fb, gb) = (f.breakpoints(), g.breakpoints());
    while i < fb.len() || j < gb.len() {
        match (fb.get(i), gb.get(j)) {
            (Some(a), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => i += 1,
            (Some(_), Some(_)) => j += 1,
            (Some(_), None) => i += 1,
            (None, Some(_)) => j += 1,
            (None, None) => unreachable!(),
        }
        u.push(f.interval_values()[i]);
        w.push(g.interval_values()[j]);
    }
    (u, w)
}

/// Certified multiplier bounds: for any pair of refinement intervals `i, j`
/// with `D = u_i w_j - u_j w_i != 0`, Cramer elimination gives
/// `max_t |a u - b w| >= |a| |D| / (|w_i| + |w_j|)` and symmetrically for
/// `b`, so every pair with signature sup at most `v0` satisfies the returned
/// bounds.
fn cramer_bounds(u: &[i64], w: &[i64], v0: u32) -> (i64, i64) {
    let mut a_bound = i64::MAX;
    let mut b_bound = i64::MAX;
    let v = i128::from(v0);
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            let d = (i128::from(u[i]) * i128::from(w[j]) - i128::from(u[j]) * i128::from(w[i]))
                .unsigned_abs();
            if d == 0 {
                continue;
            }
            let wa = (i128::from(w[i].abs()) + i128::from(w[j].abs())) * v;
            let ub = (i128::from(u[i].abs()) + i128::from(u[j].abs())) * v;
            a_bound = a_bound.min((wa / d as i128) as i64);
            b_bound = b_bound.min((ub / d as i128) as i64);
        }
    }
    assert!(
        a_bound < i64::MAX,
        "independent signatures must give a finite region"
    );
    (a_bound, b_bound)
}

/// Certified interval for `delta([x], [y])`: the minimum over all nonzero
/// multiples `a*x`, `b*y` of the cobordism distance, bounded below by
/// signature sups over the certified region and above by the best certified
/// four-genus upper bound in the region.
pub fn delta_certified(x: &ClassNode, y: &ClassNode) -> Result<DistInterval, Error> {
    if x.same_class(y) {
        return Ok(DistInterval::same_class());
    }
    let sx = combo_signature(x.combo())?;
    let sy = combo_signature(y.combo())?;
    let (u, w) = refined_values(&sx, &sy);

    let diff = g4_interval(&(x.combo() - y.combo()))?;
    let sum = g4_interval(&(x.combo() + y.combo()))?;
    let v0 = diff.upper.min(sum.upper);
    let (a_bound, b_bound) = cramer_bounds(&u, &w, v0);

    // Signature sup per candidate, straight off the refined vectors.
    let mut cands: Vec<(i64, i64, i64)> = Vec::new();
    for b in 1..=b_bound {
        for a in (-a_bound..=a_bound).filter(|a| *a != 0) {
            let sup = u
                .iter()
                .zip(&w)
                .map(|(ui, wi)| (a * ui - b * wi).abs())
                .max()
                .unwrap();
            cands.push((a, b, sup));
        }
    }
    cands.sort_by_key(|(a, b, s)| (*s, a.abs(), *b, *a < 0));
    let (la, lb, lower) = cands[0];
    let lower_sig = combo_signature(&(&x.combo().scaled(la) - &y.combo().scaled(lb)))?;
    let (_, at) = lower_sig.sup_abs_witness();
    let lower_cert = Certificate::SignaturePoint {
        pair: (la, lb),
        at: at.to_string(),
        value: lower,
    };

    let mut best_upper = v0;
    let mut best_cert = if diff.upper <= sum.upper {
        upper_cert_for((1, 1), &diff.upper_witness)
    } else {
        upper_cert_for((1, -1), &sum.upper_witness)
    };
    for (a, b, s) in &cands {
        if *s >= i64::from(best_upper) {
            break;
        }
        let interval = g4_interval(&(&x.combo().scaled(*a) - &y.combo().scaled(*b)))?;
        if interval.upper < best_upper {
            best_upper = interval.upper;
            best_cert = upper_cert_for((*a, *b), &interval.upper_witness);
        }
    }

    Ok(DistInterval {
        lower: lower as u32,
        upper: Some(best_upper),
        lower_cert,
        upper_cert: best_cert,
    })
}

/// Map `f` over `items`, optionally across threads; output order matches
/// input order regardless of the thread count.
pub(crate) fn par_map<I, O, F>(items: Vec<I>, threads: usize, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync,
{
    if threads <= 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    let jobs: std::sync::Mutex<Vec<Option<(usize, I)>>> =
        std::sync::Mutex::new(items.into_iter().enumerate().map(Some).collect());
    let total = jobs.lock().unwrap().len();
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results = std::sync::Mutex::new(Vec::with_capacity(total));
    std::thread::scope(|scope| {
        for _ in 0..threads.min(total) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if idx >= total {
                    break;
                }
                let (i, item) = jobs.lock().unwrap()[idx].take().unwrap();
                let out = f(item);
                results.lock().unwrap().push((i, out));
            });
        }
    });
    let mut slots: Vec<Option<O>> = (0..total).map(|_| None).collect();
    for (i, out) in results.into_inner().unwrap() {
        slots[i] = Some(out);
    }
    slots.into_iter().map(|s| s.unwrap()).collect()
}

/// The classification of parameters at distance one from `T(2,2m+1)`:
/// upward `m+1`, `2m`, `2m+1`, `3m+1`; downward by symmetry.
fn radius_one_classified(m: u32, m_max: u32) -> BTreeSet<u32> {
    let mut set = BTreeSet::new();
    for cand in [m + 1, 2 * m, 2 * m + 1, 3 * m + 1] {
        set.insert(cand);
    }
    if m >= 2 {
        set.insert(m - 1);
    }
    if m.is_multiple_of(2) {
        set.insert(m / 2);
    }
    if m % 2 == 1 && m >= 3 {
        set.insert((m - 1) / 2);
    }
    if m >= 4 && (m - 1).is_multiple_of(3) {
        set.insert((m - 1) / 3);
    }
    set.remove(&m);
    set.retain(|c| *c >= 1 && *c <= m_max);
    set
}

/// All odd parameters `2m'+1` with `m' <= m_max` whose class lies at
/// `delta`-distance exactly one from `[T(2,2m+1)]`, computed both by the
/// distance-one classification and by direct certified computation; any
/// disagreement is a hard error.
pub fn ball_radius_one(m: u32, m_max: u32, threads: usize) -> Result<Vec<u32>, Error> {
    if m < 1 || m > m_max {
        return Err(Error::ParameterRange {
            name: "ball center m (need 1 <= m <= m_max)",
            min: 1,
            got: m as i64,
        });
    }
    let classified = radius_one_classified(m, m_max);
    let center = ClassNode::torus(m)?;
    let others: Vec<u32> = (1..=m_max).filter(|mm| *mm != m).collect();
    let computed: Vec<Result<(u32, bool), Error>> = par_map(others, threads, |mm| {
        let node = ClassNode::torus(mm)?;
        let d = delta_certified(&center, &node)?;
        Ok((mm, d.is_exactly(1)))
    });
    for res in computed {
        let (mm, direct) = res?;
        let in_class = classified.contains(&mm);
        if direct != in_class {
            return Err(Error::BallMismatch {
                param: 2 * mm + 1,
                classified: in_class,
                computed: direct,
            });
        }
    }
    Ok(classified.iter().map(|mm| 2 * mm + 1).collect())
}

/// Default chain universe: all torus generators up to `m_max`, plus the
/// two-step witnesses `2*T(2,2m+1) + T(2,3(2m+1))`.
pub fn default_universe(m_max: u32) -> Vec<ClassNode> {
    let mut nodes = Vec::new();
    for m in 1..=m_max {
        nodes.push(ClassNode::torus(m).expect("valid generator"));
        let mut combo = KnotCombo::new();
        combo.insert(Generator::Torus { m }, 2);
        combo.insert(Generator::Torus { m: 3 * m + 1 }, 1);
        nodes.push(ClassNode::new(combo).expect("pattern combo is primitive"));
    }
    nodes
}

/// Certified interval for the chain metric `Delta([x], [y])` within the
/// given universe of intermediate classes.
///
/// The upper bound is the shortest path over edges weighted by certified
/// exact `delta` values; unreachable pairs report an unbounded upper. The
/// lower bound is 0 for equal classes, 2 when `delta >= 2` is certified,
/// else 1; `delta` exactly 1 or 2 pins `Delta` to the same value.
pub fn big_delta_interval(
    x: &ClassNode,
    y: &ClassNode,
    universe: &[ClassNode],
    threads: usize,
) -> Result<DistInterval, Error> {
    if x.same_class(y) {
        return Ok(DistInterval::same_class());
    }
    let direct = delta_certified(x, y)?;

    let mut nodes: Vec<ClassNode> = vec![x.clone(), y.clone()];
    for u in universe {
        if !nodes.iter().any(|n| n.same_class(u)) {
            nodes.push(u.clone());
        }
    }
    let pairs: Vec<(usize, usize)> = (0..nodes.len())
        .flat_map(|i| ((i + 1)..nodes.len()).map(move |j| (i, j)))
        .collect();
    let nodes_ref = &nodes;
    let deltas: Vec<Result<(usize, usize, DistInterval), Error>> =
        par_map(pairs, threads, move |(i, j)| {
            let d = delta_certified(&nodes_ref[i], &nodes_ref[j])?;
            Ok((i, j, d))
        });
    let mut adj = vec![Vec::new(); nodes.len()];
    for res in deltas {
        let (i, j, d) = res?;
        if d.exact() {
            adj[i].push((j, d.lower));
            adj[j].push((i, d.lower));
        }
    }

    // Dijkstra with predecessor tracking for the chain certificate.
    let mut dist = vec![u64::MAX; nodes.len()];
    let mut prev = vec![usize::MAX; nodes.len()];
    let mut done = vec![false; nodes.len()];
    dist[0] = 0;
    loop {
        let mut cur = usize::MAX;
        for v in 0..nodes.len() {
            if !done[v] && dist[v] < u64::MAX && (cur == usize::MAX || dist[v] < dist[cur]) {
                cur = v;
            }
        }
        if cur == usize::MAX || cur == 1 {
            break;
        }
        done[cur] = true;
        for (v, wgt) in &adj[cur] {
            let nd = dist[cur] + u64::from(*wgt);
            if nd < dist[*v] {
                dist[*v] = nd;
                prev[*v] = cur;
            }
        }
    }

    let path_upper = if dist[1] == u64::MAX {
        None
    } else {
        Some(dist[1] as u32)
    };
    let upper_cert = if path_upper.is_some() {
        let mut path = vec![1usize];
        while *path.last().unwrap() != 0 {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        Certificate::Chain {
            nodes: path.iter().map(|i| nodes[*i].label()).collect(),
        }
    } else {
        Certificate::Unbounded
    };

    let (lower, upper) = if direct.is_exactly(1) {
        (1, Some(1))
    } else if direct.is_exactly(2) {
        (2, Some(2))
    } else if direct.lower >= 2 {
        (2, path_upper)
    } else {
        (1, path_upper)
    };
    Ok(DistInterval {
        lower,
        upper,
        lower_cert: direct.lower_cert,
        upper_cert,
    })
}

/// Certified `delta` intervals for the two legs of a proposed two-step chain.
pub fn chain_witness_check(
    x: &ClassNode,
    y: &ClassNode,
    middle: &ClassNode,
) -> Result<(DistInterval, DistInterval), Error> {
    Ok((delta_certified(x, middle)?, delta_certified(middle, y)?))
}

/// `dbar(k, n) / n` as an exact rational; errors when the search is not
/// fully certified.
pub fn growth_ratio(k: u32, n: u32) -> Result<Rational, Error> {
    let res = dbar_search(k, n)?;
    if !res.all_certified {
        return Err(Error::Uncertified);
    }
    Ok(rat(i64::from(res.value), i64::from(n)))
}

pub mod zz {
    //! The max-norm demonstration metric on the projective plane of the
    //! rank-two lattice.

    /// Nonzero lattice point.
    pub type LatticePoint = (i64, i64);

    /// Gcd-reduced, sign-normalized representative of the class of `p`.
    pub fn primitive(p: LatticePoint) -> LatticePoint {
        let g = num_integer::gcd(p.0.abs(), p.1.abs());
        assert!(g != 0, "lattice points must be nonzero");
        let (a, b) = (p.0 / g, p.1 / g);
        if a < 0 || (a == 0 && b < 0) {
            (-a, -b)
        } else {
            (a, b)
        }
    }

    fn norm(p: (i64, i64)) -> i64 {
        p.0.abs().max(p.1.abs())
    }

    /// Best max-norm distance between `s * px` and any multiple `t * py`
    /// (`t >= 1`, either sign), for fixed `s`.
    fn best_for_s(px: LatticePoint, py: LatticePoint, s: i64) -> i64 {
        let mut best = i64::MAX;
        for eps in [1i64, -1] {
            let q = (eps * py.0, eps * py.1);
            let mut ts: Vec<i64> = vec![1];
            let mut push = |num: i64, den: i64| {
                if den != 0 {
                    let t = num.div_euclid(den);
                    for c in [t, t + 1] {
                        if c >= 1 {
                            ts.push(c);
                        }
                    }
                }
            };
            push(s * px.0, q.0);
            push(s * px.1, q.1);
            push(s * (px.0 - px.1), q.0 - q.1);
            push(s * (px.0 + px.1), q.0 + q.1);
            for t in ts {
                best = best.min(norm((s * px.0 - t * q.0, s * px.1 - t * q.1)));
            }
        }
        best
    }

    /// `delta` between the classes of `x` and `y`: the least max-norm
    /// distance between nonzero multiples of their primitives. The search
    /// over the first multiplier is pruned by the certified growth bound
    /// `distance >= s * |det| / (|py_0| + |py_1|)`.
    pub fn zz_delta(x: LatticePoint, y: LatticePoint) -> u32 {
        let px = primitive(x);
        let py = primitive(y);
        if px == py {
            return 0;
        }
        let det = (px.0 * py.1 - px.1 * py.0).abs();
        debug_assert!(det != 0, "distinct primitive classes are independent");
        let denom = py.0.abs() + py.1.abs();
        let mut best = best_for_s(px, py, 1);
        let mut s = 2i64;
        while s * det <= best * denom {
            best = best.min(best_for_s(px, py, s));
            s += 1;
        }
        best as u32
    }

    /// Exhaustive reference: multipliers up to `bound` on both sides.
    pub fn zz_delta_brute(x: LatticePoint, y: LatticePoint, bound: i64) -> u32 {
        let px = primitive(x);
        let py = primitive(y);
        let mut best = i64::MAX;
        for s in 1..=bound {
            for t in 1..=bound {
                for eps in [1i64, -1] {
                    best = best.min(norm((s * px.0 - eps * t * py.0, s * px.1 - eps * t * py.1)));
                }
            }
        }
        best as u32
    }

    /// Chain metric upper bound: shortest path from `[x]` to `[y]` over all
    /// primitive classes with coordinates bounded by `bound`, edges weighted
    /// by `zz_delta`. Returns the total and the chain of classes.
    pub fn zz_big_delta(x: LatticePoint, y: LatticePoint, bound: i64) -> (u32, Vec<LatticePoint>) {
        let px = primitive(x);
        let py = primitive(y);
        if px == py {
            return (0, vec![px]);
        }
        // Sign-normalized primitives enumerate each class exactly once.
        let mut nodes: Vec<LatticePoint> = Vec::new();
        for a in 0..=bound {
            for b in -bound..=bound {
                if (a > 0 || b > 0) && num_integer::gcd(a, b.abs()) == 1 {
                    nodes.push((a, b));
                }
            }
        }
        for p in [px, py] {
            if !nodes.contains(&p) {
                nodes.push(p);
            }
        }
        let src = nodes.iter().position(|p| *p == px).unwrap();
        let dst = nodes.iter().position(|p| *p == py).unwrap();

        let mut dist = vec![u64::MAX; nodes.len()];
        let mut prev = vec![usize::MAX; nodes.len()];
        let mut done = vec![false; nodes.len()];
        dist[src] = 0;
        loop {
            let mut cur = usize::MAX;
            for v in 0..nodes.len() {
                if !done[v] && dist[v] < u64::MAX && (cur == usize::MAX || dist[v] < dist[cur]) {
                    cur = v;
                }
            }
            if cur == usize::MAX || cur == dst {
                break;
            }
            done[cur] = true;
            for v in 0..nodes.len() {
                if !done[v] {
                    let nd = dist[cur] + u64::from(zz_delta(nodes[cur], nodes[v]));
                    if nd < dist[v] {
                        dist[v] = nd;
                        prev[v] = cur;
                    }
                }
            }
        }
        let mut path = vec![dst];
        while *path.last().unwrap() != src {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        (
            dist[dst] as u32,
            path.into_iter().map(|i| nodes[i]).collect(),
        )
    }
}
