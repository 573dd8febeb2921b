use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::kernel::rational::rat;
use crate::kernel::MultiPoly;

pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_BOUND: i64 = 10;

/// Largest variable count for which the doubled identity `p(xy) = p(x)p(y)`
/// is expanded symbolically under [`Mode::Auto`].
pub const EXACT_VAR_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Randomized,
    Auto,
}

impl Mode {
    pub fn resolve(self, dim: usize) -> Mode {
        match self {
            Mode::Auto if 2 * dim <= EXACT_VAR_LIMIT => Mode::Exact,
            Mode::Auto => Mode::Randomized,
            m => m,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Randomized => "randomized",
            Mode::Auto => "auto",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultVerdict {
    /// `Exact` or `Randomized`, never `Auto`.
    pub mode: Mode,
    pub holds: bool,
    /// Random points tried (randomized mode, or witness search after an
    /// exact failure).
    pub trials: usize,
    pub seed: u64,
    pub witness: Option<(Element, Element)>,
    pub note: String,
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Element {
    Element((0..dim).map(|_| rat(rng.gen_range(-bound..=bound))).collect())
}

fn fails_at(p: &MultiPoly, alg: &Algebra, a: &Element, b: &Element) -> Result<bool> {
    let ab = alg.multiply(a, b)?;
    Ok(p.evaluate(ab.coords())? != p.evaluate(a.coords())? * p.evaluate(b.coords())?)
}

/// Checks `p(ab) = p(a)p(b)`. Exact mode expands the identity in `2m`
/// variables; randomized mode samples integer points in `[−bound, bound]`.
/// On failure a concrete pair `(a, b)` is returned when one is found.
pub fn verify_multiplicative(
    p: &MultiPoly,
    alg: &Algebra,
    mode: Mode,
    seed: u64,
    trials: usize,
    bound: i64,
) -> Result<MultVerdict> {
    let m = alg.dim();
    if p.num_vars() != m {
        return Err(Error::ArityMismatch { expected: m, got: p.num_vars() });
    }
    let mode = mode.resolve(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        Mode::Exact => {
            let x = alg.generic_element(2 * m, 0);
            let y = alg.generic_element(2 * m, m);
            let xy = alg.mul_coords(&x, &y);
            let holds = p.substitute(&xy)? == &p.embed(2 * m, 0) * &p.embed(2 * m, m);
            let mut verdict = MultVerdict {
                mode,
                holds,
                trials: 0,
                seed,
                witness: None,
                note: format!("identity expanded symbolically in {} variables", 2 * m),
            };
            if !holds {
                // the identity is a nonzero polynomial, so random points expose it quickly
                for n in 1..=1000 {
                    let (a, b) = (random_element(&mut rng, m, bound), random_element(&mut rng, m, bound));
                    if fails_at(p, alg, &a, &b)? {
                        verdict.trials = n;
                        verdict.witness = Some((a, b));
                        break;
                    }
                }
            }
            Ok(verdict)
        }
        _ => {
            let mut witness = None;
            let mut used = 0;
            for n in 1..=trials {
                used = n;
                let (a, b) = (random_element(&mut rng, m, bound), random_element(&mut rng, m, bound));
                if fails_at(p, alg, &a, &b)? {
                    witness = Some((a, b));
                    break;
                }
            }
            let d = p.total_degree().unwrap_or(0);
            Ok(MultVerdict {
                mode,
                holds: witness.is_none(),
                trials: used,
                seed,
                witness,
                note: format!(
                    "{used} random points in [-{bound}, {bound}]; a false pass has probability at most ({}/{})^{used}",
                    2 * d,
                    2 * bound + 1
                ),
            })
        }
    }
}

/// Random elements with coordinates in `[−bound, bound]`, reproducible from `seed`.
pub(crate) fn sample_elements(dim: usize, count: usize, seed: u64, bound: i64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_element(&mut rng, dim, bound)).collect()
}
