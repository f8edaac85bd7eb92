//! Certified four-genus intervals for combinations of 2-stranded torus knots.
//!
//! Lower bounds come from the signature sup ([`crate::knots::max_abs_signature`]).
//! Upper bounds come from a combinatorial model of band surgery on the
//! standard schematic Seifert surface: positive terms contribute blocks of
//! bands on top, negative terms blocks on the bottom, and surgery curves are
//! grouped into *runs*, each pairing a stretch of bands in one top block with
//! a stretch in one bottom block. Runs must be drawn without crossings, so
//! their block indices are non-decreasing, and two runs meeting the same
//! block must leave one unused band between them. Each surgered curve lowers
//! the genus by one, so the bound is `(total bands)/2 - (max curves)`.
//!
//! The solver output is only ever used as an upper bound; an over-constrained
//! model can cost tightness but never correctness.

use serde::Serialize;

use crate::exactnum::Rational;
use crate::knots::{combo_signature, Generator, KnotCombo};
use crate::Error;

/// One run of surgery curves: `len` curves over consecutive bands of
/// `top_blocks[top]` paired with consecutive bands of `bottom_blocks[bottom]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Run {
    pub top: usize,
    pub bottom: usize,
    pub len: u32,
}

/// Ordered system of runs over fixed top and bottom band blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgerySchema {
    pub top_blocks: Vec<u32>,
    pub bottom_blocks: Vec<u32>,
    pub runs: Vec<Run>,
}

impl SurgerySchema {
    pub fn total_curves(&self) -> u32 {
        self.runs.iter().map(|r| r.len).sum()
    }

    /// Check every schema invariant: block sizes even and positive, run
    /// lengths positive, indices in range, no two consecutive runs over the
    /// same block pair, block indices non-decreasing along the run order,
    /// and per-block capacity including one gap band between same-block
    /// neighbours.
    pub fn validate(&self) -> bool {
        if self
            .top_blocks
            .iter()
            .chain(self.bottom_blocks.iter())
            .any(|s| *s == 0 || *s % 2 != 0)
        {
            return false;
        }
        let mut top_used = vec![0u64; self.top_blocks.len()];
        let mut bot_used = vec![0u64; self.bottom_blocks.len()];
        let mut prev: Option<&Run> = None;
        for r in &self.runs {
            if r.len == 0 || r.top >= self.top_blocks.len() || r.bottom >= self.bottom_blocks.len()
            {
                return false;
            }
            if let Some(p) = prev {
                if p.top == r.top && p.bottom == r.bottom {
                    return false;
                }
                if r.top < p.top || r.bottom < p.bottom {
                    return false;
                }
                if p.top == r.top {
                    top_used[r.top] += 1;
                }
                if p.bottom == r.bottom {
                    bot_used[r.bottom] += 1;
                }
            }
            top_used[r.top] += u64::from(r.len);
            bot_used[r.bottom] += u64::from(r.len);
            prev = Some(r);
        }
        top_used
            .iter()
            .zip(&self.top_blocks)
            .all(|(u, c)| *u <= u64::from(*c))
            && bot_used
                .iter()
                .zip(&self.bottom_blocks)
                .all(|(u, c)| *u <= u64::from(*c))
    }
}

/// Free-function form of [`SurgerySchema::validate`].
pub fn schema_validate(s: &SurgerySchema) -> bool {
    s.validate()
}

const REL_DIFF: usize = 0;
const REL_NO_GAP: usize = 1;
const REL_GAPPED: usize = 2;

struct Side {
    /// Position `p` sits before band `p`; `total` is one past the last band.
    total: usize,
    /// `starts[p]` is true when band `p` opens a new block.
    starts: Vec<bool>,
    block_of: Vec<usize>,
}

impl Side {
    fn new(blocks: &[u32]) -> Self {
        let total: usize = blocks.iter().map(|b| *b as usize).sum();
        let mut starts = vec![false; total + 1];
        let mut block_of = vec![0usize; total];
        let mut p = 0usize;
        for (i, b) in blocks.iter().enumerate() {
            starts[p] = true;
            for _ in 0..*b {
                block_of[p] = i;
                p += 1;
            }
        }
        Side {
            total,
            starts,
            block_of,
        }
    }

    /// Relation label for the block containing position `p` after a run just
    /// ended there: `Diff` at block boundaries (the previous block is done),
    /// `NoGap` in the interior.
    fn rel_after_run(&self, p: usize) -> usize {
        if p == self.total || self.starts[p] {
            REL_DIFF
        } else {
            REL_NO_GAP
        }
    }

    fn rel_after_skip(&self, p_new: usize, rel: usize) -> usize {
        if p_new == self.total || self.starts[p_new] {
            REL_DIFF
        } else if rel == REL_NO_GAP {
            REL_GAPPED
        } else {
            rel
        }
    }
}

fn start_allowed(tr: usize, br: usize) -> bool {
    (tr == REL_DIFF && br != REL_NO_GAP) || (br == REL_DIFF && tr != REL_NO_GAP)
}

/// Maximum number of surgery curves over all valid schemas for the given
/// blocks, together with an optimal witness schema.
///
/// Both lists must be nonempty with even, positive entries.
pub fn max_surgeries(tops: &[u32], bots: &[u32]) -> (u32, SurgerySchema) {
    assert!(
        !tops.is_empty() && !bots.is_empty(),
        "block lists must be nonempty"
    );
    assert!(
        tops.iter()
            .chain(bots.iter())
            .all(|b| *b > 0 && *b % 2 == 0),
        "band counts must be even and positive"
    );
    if tops.len() == 1 {
        return single_block_side(tops, bots, false);
    }
    if bots.len() == 1 {
        return single_block_side(tops, bots, true);
    }
    dp_max_surgeries(tops, bots)
}

/// `tops.len() == 1` (or mirrored): with a single block on one side, the best
/// schema uses one run per chosen block on the other side, so the optimum is
/// `max over q of min(T - q + 1, sum of the q largest capacities)`.
fn single_block_side(tops: &[u32], bots: &[u32], mirrored: bool) -> (u32, SurgerySchema) {
    let (single, many) = if mirrored {
        (bots[0], tops)
    } else {
        (tops[0], bots)
    };
    let mut order: Vec<usize> = (0..many.len()).collect();
    order.sort_by_key(|i| std::cmp::Reverse(many[*i]));
    let mut best = 0u32;
    let mut best_q = 0usize;
    let mut prefix = 0u32;
    for q in 1..=many.len() {
        prefix += many[order[q - 1]];
        let cap = (single + 1).saturating_sub(q as u32);
        let total = cap.min(prefix);
        if total >= q as u32 && total > best {
            best = total;
            best_q = q;
        }
    }
    let mut chosen: Vec<usize> = order[..best_q].to_vec();
    chosen.sort_unstable();
    let mut runs = Vec::with_capacity(best_q);
    let mut remaining = best;
    for (j, idx) in chosen.iter().enumerate() {
        let later = (best_q - j - 1) as u32;
        let len = many[*idx].min(remaining - later);
        remaining -= len;
        runs.push(if mirrored {
            Run {
                top: *idx,
                bottom: 0,
                len,
            }
        } else {
            Run {
                top: 0,
                bottom: *idx,
                len,
            }
        });
    }
    let schema = SurgerySchema {
        top_blocks: tops.to_vec(),
        bottom_blocks: bots.to_vec(),
        runs,
    };
    debug_assert!(schema.validate());
    debug_assert_eq!(schema.total_curves(), best);
    (best, schema)
}

/// Band-position dynamic program. The state walks two cursors, one over the
/// concatenated top bands and one over the bottom bands; a curve consumes one
/// band from each, a gap consumes one band on one side, and the relation
/// labels carry just enough history to enforce the merge and gap rules.
fn dp_max_surgeries(tops: &[u32], bots: &[u32]) -> (u32, SurgerySchema) {
    let t = Side::new(tops);
    let b = Side::new(bots);
    let (tn, bn) = (t.total + 1, b.total + 1);
    // f_not[((p * bn + q) * 3 + tr) * 3 + br], f_in[p * bn + q]
    let mut f_not = vec![0u32; tn * bn * 9];
    let mut f_in = vec![0u32; tn * bn];
    let idx_not = |p: usize, q: usize, tr: usize, br: usize| ((p * bn + q) * 3 + tr) * 3 + br;

    for p in (0..tn).rev() {
        for q in (0..bn).rev() {
            for tr in 0..3 {
                for br in 0..3 {
                    let mut best = 0u32;
                    if p < t.total {
                        let tr2 = t.rel_after_skip(p + 1, tr);
                        best = best.max(f_not[idx_not(p + 1, q, tr2, br)]);
                    }
                    if q < b.total {
                        let br2 = b.rel_after_skip(q + 1, br);
                        best = best.max(f_not[idx_not(p, q + 1, tr, br2)]);
                    }
                    if p < t.total && q < b.total && start_allowed(tr, br) {
                        best = best.max(1 + f_in[(p + 1) * bn + q + 1]);
                    }
                    f_not[idx_not(p, q, tr, br)] = best;
                }
            }
            let mut best = f_not[idx_not(p, q, t.rel_after_run(p), b.rel_after_run(q))];
            if p < t.total && !t.starts[p] && q < b.total && !b.starts[q] {
                best = best.max(1 + f_in[(p + 1) * bn + q + 1]);
            }
            f_in[p * bn + q] = best;
        }
    }

    let total = f_not[idx_not(0, 0, REL_DIFF, REL_DIFF)];

    // Re-walk the table to extract one optimal run system.
    let mut runs: Vec<Run> = Vec::new();
    let (mut p, mut q, mut tr, mut br) = (0usize, 0usize, REL_DIFF, REL_DIFF);
    let mut in_run = false;
    loop {
        if in_run {
            let val = f_in[p * bn + q];
            if p < t.total
                && !t.starts[p]
                && q < b.total
                && !b.starts[q]
                && val == 1 + f_in[(p + 1) * bn + q + 1]
            {
                runs.last_mut().unwrap().len += 1;
                p += 1;
                q += 1;
                continue;
            }
            tr = t.rel_after_run(p);
            br = b.rel_after_run(q);
            in_run = false;
            continue;
        }
        let val = f_not[idx_not(p, q, tr, br)];
        if val == 0 {
            break;
        }
        if p < t.total
            && q < b.total
            && start_allowed(tr, br)
            && val == 1 + f_in[(p + 1) * bn + q + 1]
        {
            runs.push(Run {
                top: t.block_of[p],
                bottom: b.block_of[q],
                len: 1,
            });
            p += 1;
            q += 1;
            in_run = true;
            continue;
        }
        if p < t.total {
            let tr2 = t.rel_after_skip(p + 1, tr);
            if val == f_not[idx_not(p + 1, q, tr2, br)] {
                p += 1;
                tr = tr2;
                continue;
            }
        }
        let br2 = b.rel_after_skip(q + 1, br);
        q += 1;
        br = br2;
    }

    let schema = SurgerySchema {
        top_blocks: tops.to_vec(),
        bottom_blocks: bots.to_vec(),
        runs,
    };
    debug_assert!(schema.validate());
    debug_assert_eq!(schema.total_curves(), total);
    (total, schema)
}

/// Independent reference enumerator: recursively tries every valid run
/// sequence. Exponential; intended for small configurations only.
pub fn max_surgeries_brute(tops: &[u32], bots: &[u32]) -> u32 {
    fn rec(
        tops: &[u32],
        bots: &[u32],
        t_used: &mut Vec<u32>,
        b_used: &mut Vec<u32>,
        last: Option<(usize, usize)>,
        acc: u32,
        best: &mut u32,
    ) {
        *best = (*best).max(acc);
        let t_left: u32 = tops.iter().zip(t_used.iter()).map(|(c, u)| c - u).sum();
        let b_left: u32 = bots.iter().zip(b_used.iter()).map(|(c, u)| c - u).sum();
        if acc + t_left.min(b_left) <= *best {
            return;
        }
        let (t0, b0) = last.unwrap_or((0, 0));
        for ti in t0..tops.len() {
            for bi in b0..bots.len() {
                if last == Some((ti, bi)) {
                    continue;
                }
                let gap_t = u32::from(last.is_some_and(|(lt, _)| lt == ti));
                let gap_b = u32::from(last.is_some_and(|(_, lb)| lb == bi));
                let avail_t = (tops[ti] - t_used[ti]).saturating_sub(gap_t);
                let avail_b = (bots[bi] - b_used[bi]).saturating_sub(gap_b);
                for len in 1..=avail_t.min(avail_b) {
                    t_used[ti] += len + gap_t;
                    b_used[bi] += len + gap_b;
                    rec(tops, bots, t_used, b_used, Some((ti, bi)), acc + len, best);
                    t_used[ti] -= len + gap_t;
                    b_used[bi] -= len + gap_b;
                }
            }
        }
    }
    let mut best = 0;
    rec(
        tops,
        bots,
        &mut vec![0; tops.len()],
        &mut vec![0; bots.len()],
        None,
        0,
        &mut best,
    );
    best
}

/// How an upper bound was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum UpperWitness {
    /// Explicit surgery schema on the schematic Seifert surface.
    Schema(SurgerySchema),
    /// Closed-form bound for `T(2,2n+1) - a*T(2,2k+1)` with `a` next to
    /// `(2n+1)/(2k+1)`.
    ClosedForm { k: u32, n: u32, a: u32 },
    /// Genus of the unsurgered Seifert surface (no cancellation available).
    Seifert,
}

/// Schema-based upper bound for the four-genus of a torus combination.
///
/// Positive coefficients contribute top blocks, negative ones bottom blocks;
/// if either side is empty the Seifert genus is returned unimproved.
pub fn upper_bound_g4(c: &KnotCombo) -> Result<(u32, UpperWitness), Error> {
    let mut tops: Vec<u32> = Vec::new();
    let mut bots: Vec<u32> = Vec::new();
    let mut seifert: u32 = 0;
    for (g, coeff) in c.terms() {
        let m = match g {
            Generator::Torus { m } => *m,
            Generator::Twist { .. } => return Err(Error::UnsupportedTwist),
        };
        let mag = coeff.unsigned_abs() as u32;
        seifert += m * mag;
        let side = if *coeff > 0 { &mut tops } else { &mut bots };
        for _ in 0..mag {
            side.push(2 * m);
        }
    }
    if tops.is_empty() || bots.is_empty() {
        return Ok((seifert, UpperWitness::Seifert));
    }
    let (curves, schema) = max_surgeries(&tops, &bots);
    Ok((seifert - curves, UpperWitness::Schema(schema)))
}

/// The two closed-form upper bounds for `T(2,2n+1) - a*T(2,2k+1)`:
/// `n - alpha*k` at `a = alpha = floor((2n+1)/(2k+1))`, and
/// `(alpha+1)(k+1) - n - 1` at `a = alpha + 1` (undefined when `2k+1`
/// divides `2n+1`).
pub fn closed_form_upper(k: u32, n: u32) -> Result<(u32, Option<u32>), Error> {
    if k < 1 || n <= k {
        return Err(Error::ParameterRange {
            name: "torus parameters (need 0 < k < n)",
            min: k as i64 + 1,
            got: n as i64,
        });
    }
    let (k64, n64) = (i64::from(k), i64::from(n));
    let alpha = (2 * n64 + 1) / (2 * k64 + 1);
    let at_alpha = (n64 - alpha * k64) as u32;
    let at_next = if (2 * n64 + 1) % (2 * k64 + 1) != 0 {
        Some(((alpha + 1) * (k64 + 1) - n64 - 1) as u32)
    } else {
        None
    };
    Ok((at_alpha, at_next))
}

/// Certified four-genus interval.
#[derive(Clone, Debug)]
pub struct GenusInterval {
    pub lower: u32,
    pub upper: u32,
    /// Point where `|signature|` attains the lower bound.
    pub lower_witness: Rational,
    pub upper_witness: UpperWitness,
}

impl GenusInterval {
    pub fn exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Shape test: `T(2,2n+1) - a*T(2,2k+1)` up to mirror, returning `(k, n, a)`.
fn unit_over_smaller(c: &KnotCombo) -> Option<(u32, u32, u32)> {
    let ts: Vec<(u32, i64)> = c
        .terms()
        .map(|(g, v)| match g {
            Generator::Torus { m } => Some((*m, *v)),
            Generator::Twist { .. } => None,
        })
        .collect::<Option<Vec<_>>>()?;
    if ts.len() != 2 {
        return None;
    }
    // BTreeMap order: ts[0] is the smaller parameter.
    let ((k, ck), (n, cn)) = (ts[0], ts[1]);
    if cn.abs() == 1 && ck.signum() == -cn.signum() {
        Some((k, n, ck.unsigned_abs() as u32))
    } else {
        None
    }
}

/// Signature lower bound plus the best available certified upper bound.
pub fn g4_interval(c: &KnotCombo) -> Result<GenusInterval, Error> {
    let sig = combo_signature(c)?;
    let (lower, at) = sig.sup_abs_witness();
    let (mut upper, mut witness) = upper_bound_g4(c)?;
    if let Some((k, n, a)) = unit_over_smaller(c) {
        let alpha = ((2 * u64::from(n) + 1) / (2 * u64::from(k) + 1)) as u32;
        let (at_alpha, at_next) = closed_form_upper(k, n)?;
        let candidate = if a == alpha {
            Some(at_alpha)
        } else if a == alpha + 1 {
            at_next
        } else {
            None
        };
        if let Some(v) = candidate {
            if v < upper {
                upper = v;
                witness = UpperWitness::ClosedForm { k, n, a };
            }
        }
    }
    Ok(GenusInterval {
        lower: lower as u32,
        upper,
        lower_witness: at,
        upper_witness: witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knots::torus_pair_combo;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn validate_examples() {
        let empty = SurgerySchema {
            top_blocks: vec![2],
            bottom_blocks: vec![2],
            runs: vec![],
        };
        assert!(empty.validate());

        // Two runs of four with room for the gap band.
        let fig = SurgerySchema {
            top_blocks: vec![12],
            bottom_blocks: vec![4, 4],
            runs: vec![
                Run {
                    top: 0,
                    bottom: 0,
                    len: 4,
                },
                Run {
                    top: 0,
                    bottom: 1,
                    len: 4,
                },
            ],
        };
        assert!(fig.validate());

        // Same shape but lengths 6+6 leave no room for the top gap.
        let crowded = SurgerySchema {
            top_blocks: vec![12],
            bottom_blocks: vec![6, 6],
            runs: vec![
                Run {
                    top: 0,
                    bottom: 0,
                    len: 6,
                },
                Run {
                    top: 0,
                    bottom: 1,
                    len: 6,
                },
            ],
        };
        assert!(!crowded.validate());

        // Adjacent runs over the same block pair must merge.
        let split = SurgerySchema {
            top_blocks: vec![12],
            bottom_blocks: vec![8],
            runs: vec![
                Run {
                    top: 0,
                    bottom: 0,
                    len: 2,
                },
                Run {
                    top: 0,
                    bottom: 0,
                    len: 2,
                },
            ],
        };
        assert!(!split.validate());
    }

    #[test]
    fn paper_figure_counts() {
        assert_eq!(max_surgeries(&[12], &[4, 4]).0, 8);
        assert_eq!(max_surgeries(&[12], &[4, 4, 4]).0, 10);
        assert_eq!(max_surgeries(&[16, 16], &[10, 10, 10]).0, 29);
    }

    #[test]
    fn dp_matches_brute_on_small_configs() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..60 {
            let tops: Vec<u32> = (0..rng.gen_range(1..=3))
                .map(|_| 2 * rng.gen_range(1..=4))
                .collect();
            let bots: Vec<u32> = (0..rng.gen_range(1..=3))
                .map(|_| 2 * rng.gen_range(1..=4))
                .collect();
            let (dp, witness) = dp_max_surgeries(&tops, &bots);
            assert!(witness.validate());
            assert_eq!(witness.total_curves(), dp);
            assert_eq!(dp, max_surgeries_brute(&tops, &bots), "{tops:?} {bots:?}");
            assert_eq!(dp, max_surgeries(&tops, &bots).0);
        }

        // A few larger shapes than the exhaustive sweep covers.
        for _ in 0..12 {
            let tops: Vec<u32> = (0..rng.gen_range(2..=3))
                .map(|_| 2 * rng.gen_range(2..=5))
                .collect();
            let bots: Vec<u32> = (0..rng.gen_range(2..=3))
                .map(|_| 2 * rng.gen_range(2..=5))
                .collect();
            assert_eq!(
                dp_max_surgeries(&tops, &bots).0,
                max_surgeries_brute(&tops, &bots),
                "{tops:?} {bots:?}"
            );
        }
    }

    #[test]
    fn upper_bound_is_mirror_symmetric() {
        let mut rng = StdRng::seed_from_u64(29);
        for _ in 0..60 {
            let mut c = KnotCombo::new();
            for _ in 0..rng.gen_range(1..=3) {
                c.insert(
                    Generator::Torus {
                        m: rng.gen_range(1..=12),
                    },
                    rng.gen_range(-3i64..=3),
                );
            }
            if c.is_unknot() {
                continue;
            }
            assert_eq!(
                upper_bound_g4(&c).unwrap().0,
                upper_bound_g4(&-&c).unwrap().0
            );
        }
    }

    #[test]
    fn fast_path_matches_dp() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let single = vec![2 * rng.gen_range(1..=10)];
            let many: Vec<u32> = (0..rng.gen_range(1..=4))
                .map(|_| 2 * rng.gen_range(1..=5))
                .collect();
            assert_eq!(
                single_block_side(&single, &many, false).0,
                dp_max_surgeries(&single, &many).0
            );
            assert_eq!(
                single_block_side(&many, &single, true).0,
                dp_max_surgeries(&many, &single).0
            );
        }
    }

    #[test]
    fn surgeries_bounded_by_smaller_side() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let tops: Vec<u32> = (0..rng.gen_range(1..=4))
                .map(|_| 2 * rng.gen_range(1..=6))
                .collect();
            let bots: Vec<u32> = (0..rng.gen_range(1..=4))
                .map(|_| 2 * rng.gen_range(1..=6))
                .collect();
            let (count, _) = max_surgeries(&tops, &bots);
            let cap = tops.iter().sum::<u32>().min(bots.iter().sum());
            assert!(count <= cap);
        }
    }

    #[test]
    fn upper_bound_examples() {
        // T(2,13) - 2*T(2,5)
        let c = torus_pair_combo(2, 6, 2, 1).unwrap();
        assert_eq!(upper_bound_g4(&c).unwrap().0, 2);

        // T(2,91) - 2*T(2,41)
        let c = torus_pair_combo(20, 45, 2, 1).unwrap();
        assert_eq!(upper_bound_g4(&c).unwrap().0, 5);

        // 2*T(2,5) + T(2,15) - T(2,25)
        let mut c = KnotCombo::new();
        c.insert(Generator::torus(2).unwrap(), 2);
        c.insert(Generator::torus(7).unwrap(), 1);
        c.insert(Generator::torus(12).unwrap(), -1);
        let (bound, witness) = upper_bound_g4(&c).unwrap();
        assert_eq!(bound, 1);
        match witness {
            UpperWitness::Schema(s) => {
                assert!(s.validate());
                assert_eq!(s.total_curves(), 22);
            }
            other => panic!("expected schema witness, got {other:?}"),
        }

        // One-sided combination falls back to the Seifert genus.
        let mut pos = KnotCombo::new();
        pos.insert(Generator::torus(2).unwrap(), 2);
        pos.insert(Generator::torus(7).unwrap(), 1);
        assert_eq!(upper_bound_g4(&pos).unwrap(), (11, UpperWitness::Seifert));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_upper(3, 11).unwrap(), (2, Some(4)));
        assert_eq!(closed_form_upper(2, 12).unwrap(), (2, None));
        assert_eq!(closed_form_upper(1, 2).unwrap(), (1, Some(1)));
        assert!(closed_form_upper(3, 3).is_err());
        assert!(closed_form_upper(0, 3).is_err());
    }

    #[test]
    fn interval_examples() {
        // T(2,23) - 3*T(2,7)
        let i = g4_interval(&torus_pair_combo(3, 11, 3, 1).unwrap()).unwrap();
        assert_eq!((i.lower, i.upper), (2, 2));
        assert!(i.exact());

        // 2*T(2,91) - 3*T(2,61)
        let i = g4_interval(&torus_pair_combo(30, 45, 3, 2).unwrap()).unwrap();
        assert_eq!((i.lower, i.upper), (2, 2));

        // T(2,7) - T(2,5)
        let i = g4_interval(&torus_pair_combo(2, 3, 1, 1).unwrap()).unwrap();
        assert_eq!((i.lower, i.upper), (1, 1));

        // Unknot.
        let i = g4_interval(&KnotCombo::new()).unwrap();
        assert_eq!((i.lower, i.upper), (0, 0));

        // Pure generators: the signature meets the Seifert genus.
        for m in 1..=8u32 {
            let i = g4_interval(&KnotCombo::single(Generator::torus(m).unwrap())).unwrap();
            assert_eq!((i.lower, i.upper), (m, m));
        }
    }

    #[test]
    fn interval_ordering_random() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..120 {
            let mut c = KnotCombo::new();
            for _ in 0..rng.gen_range(1..=3) {
                let m = rng.gen_range(1..=25u32);
                let v = rng.gen_range(-4i64..=4);
                c.insert(Generator::Torus { m }, v);
            }
            let i = g4_interval(&c).unwrap();
            assert!(i.lower <= i.upper, "{c}: [{}, {}]", i.lower, i.upper);
        }
    }

    #[test]
    fn triangle_on_exact_values() {
        // d(x, z) <= d(x, y) + d(y, z) whenever all three differences are exact.
        let mut rng = StdRng::seed_from_u64(5);
        let mut combos = Vec::new();
        for _ in 0..12 {
            let mut c = KnotCombo::new();
            for _ in 0..rng.gen_range(1..=2) {
                c.insert(
                    Generator::Torus {
                        m: rng.gen_range(1..=8),
                    },
                    rng.gen_range(-2i64..=2),
                );
            }
            combos.push(c);
        }
        for x in &combos {
            for y in &combos {
                for z in &combos {
                    let dxy = g4_interval(&(x - y)).unwrap();
                    let dyz = g4_interval(&(y - z)).unwrap();
                    let dxz = g4_interval(&(x - z)).unwrap();
                    if dxy.exact() && dyz.exact() && dxz.exact() {
                        assert!(dxz.upper <= dxy.upper + dyz.upper);
                    }
                }
            }
        }
    }
}
