//! Generator knot families and their exact signature data.
//!
//! Two families generate everything in this crate: the 2-stranded torus knots
//! `T(2,2m+1)` and the twist knots `W(n)` (the n-twisted double of the unknot
//! with Seifert matrix `[[1,1],[0,n]]`). Torus knots carry full signature
//! step functions; twist knots carry only the cosine of their signature jump
//! angle, which is all the Rips construction needs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::exactnum::{rat, Rational, StepFunction};
use crate::Error;

/// A generator knot: `Torus { m }` is `T(2,2m+1)`, `Twist { n }` is the
/// n-twisted double `W(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Torus { m: u32 },
    Twist { n: u32 },
}

impl Generator {
    pub fn torus(m: u32) -> Result<Self, Error> {
        if m < 1 {
            return Err(Error::ParameterRange {
                name: "torus parameter m",
                min: 1,
                got: m as i64,
            });
        }
        Ok(Generator::Torus { m })
    }

    /// Torus knot from its odd parameter `q = 2m+1 >= 3`.
    pub fn torus_odd(q: u32) -> Result<Self, Error> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(Error::ParameterRange {
                name: "odd torus parameter",
                min: 3,
                got: q as i64,
            });
        }
        Generator::torus((q - 1) / 2)
    }

    pub fn twist(n: u32) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::ParameterRange {
                name: "twist parameter n",
                min: 1,
                got: n as i64,
            });
        }
        Ok(Generator::Twist { n })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Torus { m } => write!(f, "T(2,{})", 2 * m + 1),
            Generator::Twist { n } => write!(f, "W({n})"),
        }
    }
}

/// Formal integer linear combination of generators. The empty combination is
/// the unknot class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotCombo {
    terms: BTreeMap<Generator, i64>,
}

impl KnotCombo {
    pub fn new() -> Self {
        KnotCombo::default()
    }

    pub fn single(g: Generator) -> Self {
        let mut c = KnotCombo::new();
        c.insert(g, 1);
        c
    }

    /// Add `coeff` copies of `g`, dropping the term if it cancels.
    pub fn insert(&mut self, g: Generator, coeff: i64) {
        let e = self.terms.entry(g).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &i64)> {
        self.terms.iter()
    }

    pub fn is_unknot(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_twist(&self) -> bool {
        self.terms
            .keys()
            .any(|g| matches!(g, Generator::Twist { .. }))
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return KnotCombo::new();
        }
        KnotCombo {
            terms: self.terms.iter().map(|(g, v)| (*g, v * c)).collect(),
        }
    }

    /// Gcd of the coefficients; 0 for the empty combination.
    pub fn coefficient_gcd(&self) -> i64 {
        self.terms.values().fold(0i64, |g, v| g.gcd(v))
    }

    /// Primitive form and the (signed) content: `self = content * primitive`,
    /// with the first coefficient of the primitive positive.
    pub fn primitive(&self) -> (KnotCombo, i64) {
        let g = self.coefficient_gcd();
        if g == 0 {
            return (KnotCombo::new(), 0);
        }
        let sign = match self.terms.values().next() {
            Some(v) if *v < 0 => -1,
            _ => 1,
        };
        let content = g * sign;
        let prim = KnotCombo {
            terms: self.terms.iter().map(|(k, v)| (*k, v / content)).collect(),
        };
        (prim, content)
    }
}

impl Add for &KnotCombo {
    type Output = KnotCombo;
    fn add(self, rhs: &KnotCombo) -> KnotCombo {
        let mut out = self.clone();
        for (g, v) in rhs.terms() {
            out.insert(*g, *v);
        }
        out
    }
}

impl Sub for &KnotCombo {
    type Output = KnotCombo;
    fn sub(self, rhs: &KnotCombo) -> KnotCombo {
        let mut out = self.clone();
        for (g, v) in rhs.terms() {
            out.insert(*g, -v);
        }
        out
    }
}

impl Neg for &KnotCombo {
    type Output = KnotCombo;
    fn neg(self) -> KnotCombo {
        self.scaled(-1)
    }
}

impl fmt::Display for KnotCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, v)) in self.terms.iter().enumerate() {
            let mag = v.abs();
            if i == 0 {
                if *v < 0 {
                    write!(f, "-")?;
                }
            } else if *v < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Normalized signature step function of `T(2,2m+1)`: breakpoints
/// `(2j-1)/(2m+1)` for `j = 1..=m`, interval values `0, 1, ..., m`.
pub fn torus_signature(m: u32) -> Result<StepFunction, Error> {
    if m < 1 {
        return Err(Error::ParameterRange {
            name: "torus parameter m",
            min: 1,
            got: m as i64,
        });
    }
    let q = 2 * i64::from(m) + 1;
    let bps = (1..=i64::from(m)).map(|j| rat(2 * j - 1, q)).collect();
    let values = (0..=i64::from(m)).collect();
    StepFunction::new(bps, values)
}

/// Signature step function of an integer combination of torus knots.
pub fn combo_signature(c: &KnotCombo) -> Result<StepFunction, Error> {
    let mut sum = StepFunction::zero();
    for (g, coeff) in c.terms() {
        match g {
            Generator::Torus { m } => {
                sum = sum.add(&torus_signature(*m)?.scale(*coeff));
            }
            Generator::Twist { .. } => return Err(Error::UnsupportedTwist),
        }
    }
    Ok(sum)
}

/// `S(K)`: the maximum of `|signature|` over `(0, 1]`, a lower bound for the
/// four-genus.
pub fn max_abs_signature(c: &KnotCombo) -> Result<i64, Error> {
    Ok(combo_signature(c)?.sup_abs())
}

/// Floor that steps down at integers: `floor(x)` off integers, `x - 1` at
/// integers. Equivalently `-floor(-x) - 1`.
pub fn double_floor(x: &Rational) -> BigInt {
    -(-x).floor().to_integer() - BigInt::one()
}

/// The three signature evaluations of `b*T(2,2n+1) - a*T(2,2k+1)` at
/// `1/(2k+1) - eps`, `1`, and `(2k-1)/(2k+1) + eps`, read off the step
/// function itself. The middle value always equals `b*n - a*k`.
pub fn jump_values(k: u32, n: u32, a: i64, b: i64) -> Result<(i64, i64, i64), Error> {
    if k < 1 || n <= k {
        return Err(Error::ParameterRange {
            name: "torus parameters (need 0 < k < n)",
            min: k as i64 + 1,
            got: n as i64,
        });
    }
    if a <= 0 || b <= 0 {
        return Err(Error::ParameterRange {
            name: "coefficients a, b",
            min: 1,
            got: a.min(b),
        });
    }
    let mut combo = KnotCombo::new();
    combo.insert(Generator::torus(n)?, b);
    combo.insert(Generator::torus(k)?, -a);
    let sig = combo_signature(&combo)?;
    let q = 2 * i64::from(k) + 1;
    let v1 = sig.limit_left(&rat(1, q));
    let v2 = *sig.interval_values().last().unwrap();
    let v3 = sig.limit_right(&rat(q - 2, q));
    debug_assert_eq!(v2, b * i64::from(n) - a * i64::from(k));
    Ok((v1, v2, v3))
}

/// Cosine of the signature jump angle of the twist knot `W(n)`:
/// `1 - 1/(2n) = (2n-1)/(2n)`.
pub fn twist_jump_cosine(n: u32) -> Result<Rational, Error> {
    if n < 1 {
        return Err(Error::ParameterRange {
            name: "twist parameter n",
            min: 1,
            got: n as i64,
        });
    }
    Ok(rat(2 * i64::from(n) - 1, 2 * i64::from(n)))
}

/// Convenience: `b*T(2,2n+1) - a*T(2,2k+1)` as a combination (parameters are
/// the half-integers `k`, `n`).
pub fn torus_pair_combo(k: u32, n: u32, a: i64, b: i64) -> Result<KnotCombo, Error> {
    let mut c = KnotCombo::new();
    c.insert(Generator::torus(n)?, b);
    c.insert(Generator::torus(k)?, -a);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    #[test]
    fn torus_signature_shapes() {
        let t3 = torus_signature(1).unwrap();
        assert_eq!(t3.breakpoints(), &[rat(1, 3)]);
        assert_eq!(t3.interval_values(), &[0, 1]);
        let t7 = torus_signature(3).unwrap();
        assert_eq!(t7.breakpoints(), &[rat(1, 7), rat(3, 7), rat(5, 7)]);
        assert_eq!(t7.interval_values(), &[0, 1, 2, 3]);
        assert_eq!(t7.eval(&rat(1, 8)).unwrap(), rat_int(0));
        assert!(torus_signature(0).is_err());
    }

    #[test]
    fn combo_signature_examples() {
        assert!(combo_signature(&KnotCombo::new()).unwrap().is_zero());

        // T(2,23) - 3*T(2,7)
        let c = torus_pair_combo(3, 11, 3, 1).unwrap();
        assert_eq!(max_abs_signature(&c).unwrap(), 2);

        // 2*T(2,17) - 3*T(2,11)
        let c = torus_pair_combo(5, 8, 3, 2).unwrap();
        assert_eq!(max_abs_signature(&c).unwrap(), 2);

        let mut tw = KnotCombo::new();
        tw.insert(Generator::twist(2).unwrap(), 1);
        assert_eq!(combo_signature(&tw), Err(Error::UnsupportedTwist));
    }

    #[test]
    fn sharp_s_examples() {
        assert_eq!(max_abs_signature(&KnotCombo::new()).unwrap(), 0);
        // T(2,91) - 2*T(2,41)
        let c = torus_pair_combo(20, 45, 2, 1).unwrap();
        assert_eq!(max_abs_signature(&c).unwrap(), 5);
        // 3*T(2,41) - 2*T(2,61), the mirror of 2*T(2,61) - 3*T(2,41)
        let mut c = KnotCombo::new();
        c.insert(Generator::torus(20).unwrap(), 3);
        c.insert(Generator::torus(30).unwrap(), -2);
        assert_eq!(max_abs_signature(&c).unwrap(), 2);
    }

    #[test]
    fn double_floor_cases() {
        assert_eq!(double_floor(&rat(7, 2)), BigInt::from(3));
        assert_eq!(double_floor(&rat_int(3)), BigInt::from(2));
        assert_eq!(double_floor(&rat(-3, 2)), BigInt::from(-2));
        assert_eq!(double_floor(&rat_int(0)), BigInt::from(-1));
    }

    #[test]
    fn jump_value_examples() {
        let (_, v2, _) = jump_values(3, 11, 3, 1).unwrap();
        assert_eq!(v2, 2);
        // v3 is a signed evaluation; its magnitude is what the sup sees.
        assert_eq!(jump_values(5, 8, 3, 2).unwrap(), (2, 1, -1));
        let (v1, _, _) = jump_values(1, 6, 4, 1).unwrap();
        assert_eq!(v1, 2);
        assert!(jump_values(3, 3, 1, 1).is_err());
        assert!(jump_values(3, 11, 0, 1).is_err());
    }

    #[test]
    fn jump_value_v1_matches_double_floor_count() {
        for k in 1..8u32 {
            for n in (k + 1)..14 {
                for (a, b) in [(1, 1), (2, 1), (3, 2), (1, 3)] {
                    let (v1, _, _) = jump_values(k, n, a, b).unwrap();
                    let x = rat(2 * i64::from(n) + 1, 2 * (2 * i64::from(k) + 1)) + rat(1, 2);
                    let j1 = double_floor(&x).to_i64().unwrap();
                    assert!(j1 >= 1);
                    assert_eq!(v1.abs(), b * j1, "k={k} n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn twist_cosines() {
        assert_eq!(twist_jump_cosine(1).unwrap(), rat(1, 2));
        assert_eq!(twist_jump_cosine(2).unwrap(), rat(3, 4));
        let all: Vec<Rational> = (1..=100).map(|n| twist_jump_cosine(n).unwrap()).collect();
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(all.len(), dedup.len());
        assert!(twist_jump_cosine(0).is_err());
    }

    #[test]
    fn display_round() {
        let mut c = KnotCombo::new();
        c.insert(Generator::torus(8).unwrap(), 2);
        c.insert(Generator::torus(5).unwrap(), -3);
        assert_eq!(c.to_string(), "-3*T(2,11) + 2*T(2,17)");
    }

    fn arb_combo() -> impl Strategy<Value = KnotCombo> {
        proptest::collection::btree_map(1u32..=30, -5i64..=5, 0..4).prop_map(|m| {
            let mut c = KnotCombo::new();
            for (mm, v) in m {
                c.insert(Generator::Torus { m: mm }, v);
            }
            c
        })
    }

    proptest! {
        #[test]
        fn signature_is_additive(c1 in arb_combo(), c2 in arb_combo()) {
            let lhs = combo_signature(&(&c1 + &c2)).unwrap();
            let rhs = combo_signature(&c1).unwrap().add(&combo_signature(&c2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sharp_s_mirror(c in arb_combo()) {
            prop_assert_eq!(
                max_abs_signature(&c).unwrap(),
                max_abs_signature(&-&c).unwrap()
            );
        }
    }

    #[test]
    fn pure_generator_sharp_s() {
        for m in 1..=10u32 {
            let c = KnotCombo::single(Generator::torus(m).unwrap());
            assert_eq!(max_abs_signature(&c).unwrap(), i64::from(m));
        }
    }
}
