//! Exact rationals and canonical integer step functions on `(0, 1]`.
//!
//! A [`StepFunction`] stores strictly increasing breakpoints in the open
//! interval `(0, 1)` and one integer value per open interval between them.
//! The value at `t = 1` is the last interval value; the value at a breakpoint
//! is never stored and is recovered as the two-sided average of the adjacent
//! interval values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational, always reduced and with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num/den` as a [`Rational`]. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Lossy conversion for rendering; never used in computations.
pub fn approx(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Piecewise-constant function on `(0, 1]` in canonical form.
///
/// Canonical means adjacent interval values differ; equal neighbours are
/// merged and the breakpoint between them dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction {
    breakpoints: Vec<Rational>,
    values: Vec<i64>,
}

impl StepFunction {
    /// The zero function: no breakpoints, constant 0.
    pub fn zero() -> Self {
        StepFunction {
            breakpoints: Vec::new(),
            values: vec![0],
        }
    }

    /// Build from breakpoints and interval values, canonicalizing the result.
    ///
    /// `values.len()` must be `breakpoints.len() + 1`; breakpoints must be
    /// strictly increasing and lie in the open interval `(0, 1)`.
    pub fn new(breakpoints: Vec<Rational>, values: Vec<i64>) -> Result<Self, Error> {
        if values.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidStepFunction(
                "need exactly one value per interval",
            ));
        }
        let zero = Rational::zero();
        let one = Rational::one();
        for (i, b) in breakpoints.iter().enumerate() {
            if *b <= zero || *b >= one {
                return Err(Error::InvalidStepFunction(
                    "breakpoints must lie strictly between 0 and 1",
                ));
            }
            if i > 0 && breakpoints[i - 1] >= *b {
                return Err(Error::InvalidStepFunction(
                    "breakpoints must be strictly increasing",
                ));
            }
        }
        Ok(StepFunction {
            breakpoints,
            values,
        }
        .canonicalized())
    }

    fn canonicalized(self) -> Self {
        let mut bps = Vec::with_capacity(self.breakpoints.len());
        let mut vals = Vec::with_capacity(self.values.len());
        vals.push(self.values[0]);
        for (b, v) in self.breakpoints.into_iter().zip(self.values[1..].iter()) {
            if *v != *vals.last().unwrap() {
                bps.push(b);
                vals.push(*v);
            }
        }
        StepFunction {
            breakpoints: bps,
            values: vals,
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn interval_values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.breakpoints.is_empty() && self.values[0] == 0
    }

    /// Pointwise sum, in canonical form.
    pub fn add(&self, other: &Self) -> Self {
        let mut bps = Vec::with_capacity(self.breakpoints.len() + other.breakpoints.len());
        let mut vals = Vec::with_capacity(bps.capacity() + 1);
        let (mut i, mut j) = (0usize, 0usize);
        vals.push(self.values[0] + other.values[0]);
        loop {
            let next = match (self.breakpoints.get(i), other.breakpoints.get(j)) {
                (None, None) => break,
                (Some(a), None) => {
                    i += 1;
                    a.clone()
                }
                (None, Some(b)) => {
                    j += 1;
                    b.clone()
                }
                (Some(a), Some(b)) => {
                    if a < b {
                        i += 1;
                        a.clone()
                    } else if b < a {
                        j += 1;
                        b.clone()
                    } else {
                        i += 1;
                        j += 1;
                        a.clone()
                    }
                }
            };
            bps.push(next);
            vals.push(self.values[i] + other.values[j]);
        }
        StepFunction {
            breakpoints: bps,
            values: vals,
        }
        .canonicalized()
    }

    /// Pointwise integer multiple; scaling by 0 yields the zero function.
    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return StepFunction::zero();
        }
        StepFunction {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        }
        .canonicalized()
    }

    /// Maximum of `|value|` over all intervals (the value at 1 is covered by
    /// the last interval, and breakpoint averages never exceed this).
    pub fn sup_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Like [`sup_abs`](Self::sup_abs), together with a point attaining it:
    /// the midpoint of the first maximizing interval, or `1` when the last
    /// interval is the first maximizer.
    pub fn sup_abs_witness(&self) -> (i64, Rational) {
        let mut best = 0i64;
        let mut at = Rational::one();
        for (idx, v) in self.values.iter().enumerate() {
            if v.abs() > best {
                best = v.abs();
                at = if idx == self.values.len() - 1 {
                    Rational::one()
                } else {
                    let lo = if idx == 0 {
                        Rational::zero()
                    } else {
                        self.breakpoints[idx - 1].clone()
                    };
                    (lo + &self.breakpoints[idx]) / rat_int(2)
                };
            }
        }
        (best, at)
    }

    /// Exact evaluation on `(0, 1]`. At a breakpoint this is the two-sided
    /// average of the adjacent interval values, a half-integer.
    pub fn eval(&self, t: &Rational) -> Result<Rational, Error> {
        if *t <= Rational::zero() || *t > Rational::one() {
            return Err(Error::OutOfDomain(t.clone()));
        }
        match self.breakpoints.binary_search(t) {
            Ok(i) => Ok(rat_int(self.values[i] + self.values[i + 1]) / rat_int(2)),
            Err(i) => Ok(rat_int(self.values[i])),
        }
    }

    /// Value on the interval immediately to the right of `t` (for `t` in `[0, 1)`).
    pub fn limit_right(&self, t: &Rational) -> i64 {
        let idx = match self.breakpoints.binary_search(t) {
            Ok(i) => i + 1,
            Err(i) => i,
        };
        self.values[idx]
    }

    /// Value on the interval immediately to the left of `t` (for `t` in `(0, 1]`).
    pub fn limit_left(&self, t: &Rational) -> i64 {
        let idx = match self.breakpoints.binary_search(t) {
            Ok(i) => i,
            Err(i) => i,
        };
        self.values[idx]
    }

    /// Breakpoints together with the jump (right value minus left value) at each.
    pub fn jumps(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.breakpoints
            .iter()
            .enumerate()
            .map(|(i, b)| (b, self.values[i + 1] - self.values[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::torus_signature;
    use proptest::prelude::*;

    #[test]
    fn zero_is_identity_for_add() {
        let g = torus_signature(3).unwrap();
        assert_eq!(StepFunction::zero().add(&g), g);
        assert_eq!(g.add(&StepFunction::zero()), g);
    }

    #[test]
    fn trefoil_doubles() {
        let f = torus_signature(1).unwrap();
        let sum = f.add(&f);
        assert_eq!(sum.breakpoints(), &[rat(1, 3)]);
        assert_eq!(sum.interval_values(), &[0, 2]);
    }

    #[test]
    fn t13_minus_four_trefoils() {
        let f = torus_signature(6).unwrap();
        let g = torus_signature(1).unwrap().scale(-4);
        let sum = f.add(&g);
        let expect_bps: Vec<Rational> = [
            rat(1, 13),
            rat(3, 13),
            rat(1, 3),
            rat(5, 13),
            rat(7, 13),
            rat(9, 13),
            rat(11, 13),
        ]
        .to_vec();
        assert_eq!(sum.breakpoints(), &expect_bps[..]);
        assert_eq!(sum.interval_values(), &[0, 1, 2, -2, -1, 0, 1, 2]);
        assert_eq!(sum.sup_abs(), 2);
    }

    #[test]
    fn scaling() {
        let f = torus_signature(1).unwrap();
        assert_eq!(f.scale(1), f);
        assert_eq!(f.scale(-1).interval_values(), &[0, -1]);
        let quad = f.scale(4);
        assert_eq!(quad.breakpoints(), &[rat(1, 3)]);
        assert_eq!(quad.interval_values(), &[0, 4]);
        assert_eq!(quad.eval(&rat(1, 4)).unwrap(), rat_int(0));
        assert_eq!(quad.eval(&rat(1, 2)).unwrap(), rat_int(4));
        assert!(f.scale(0).is_zero());
    }

    #[test]
    fn sup_abs_values() {
        assert_eq!(StepFunction::zero().sup_abs(), 0);
        assert_eq!(torus_signature(3).unwrap().sup_abs(), 3);
    }

    #[test]
    fn eval_cases() {
        let t3 = torus_signature(1).unwrap();
        assert_eq!(t3.eval(&rat(1, 2)).unwrap(), rat_int(1));
        assert_eq!(t3.eval(&rat(1, 3)).unwrap(), rat(1, 2));
        let t5 = torus_signature(2).unwrap();
        assert_eq!(t5.eval(&rat(1, 5)).unwrap(), rat(1, 2));
        assert!(t5.eval(&rat_int(0)).is_err());
        assert!(t5.eval(&rat(3, 2)).is_err());
        assert!(t5.eval(&rat(-1, 5)).is_err());
    }

    #[test]
    fn rejects_bad_breakpoints() {
        assert!(StepFunction::new(vec![rat_int(1)], vec![0, 1]).is_err());
        assert!(StepFunction::new(vec![rat(1, 2), rat(1, 3)], vec![0, 1, 2]).is_err());
        assert!(StepFunction::new(vec![rat(1, 2)], vec![0]).is_err());
    }

    fn arb_step() -> impl Strategy<Value = StepFunction> {
        // Breakpoints i/23 for a random subset of 1..23, random small values.
        (
            proptest::collection::btree_set(1i64..23, 0..6),
            proptest::collection::vec(-5i64..=5, 6),
        )
            .prop_map(|(nums, vals)| {
                let bps: Vec<Rational> = nums.iter().map(|n| rat(*n, 23)).collect();
                let values = vals[..bps.len() + 1].to_vec();
                StepFunction::new(bps, values).unwrap()
            })
    }

    proptest! {
        #[test]
        fn add_commutes(f in arb_step(), g in arb_step()) {
            prop_assert_eq!(f.add(&g), g.add(&f));
        }

        #[test]
        fn add_associates(f in arb_step(), g in arb_step(), h in arb_step()) {
            prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        }

        #[test]
        fn negation_cancels(f in arb_step()) {
            prop_assert!(f.add(&f.scale(-1)).is_zero());
        }

        #[test]
        fn sup_abs_subadditive(f in arb_step(), g in arb_step()) {
            prop_assert!(f.add(&g).sup_abs() <= f.sup_abs() + g.sup_abs());
        }

        #[test]
        fn canonical_idempotent(f in arb_step()) {
            let again = StepFunction::new(f.breakpoints().to_vec(), f.interval_values().to_vec()).unwrap();
            prop_assert_eq!(again, f);
        }
    }
}
