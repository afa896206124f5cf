//! Seeded random generator words, used by the q-invariance checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Monomial;
use crate::{GroundPoly, Rat};

use super::generator::monomial_orthogonal_group;
use super::{Generator, Letter, TameElement};

/// A random elementary twist with a small polynomial in `x1`, `x3`.
fn random_twist(rng: &mut ChaCha8Rng) -> Generator {
    use crate::algebra::Scalar;
    let mut p = GroundPoly::zero();
    let n_terms = rng.gen_range(1..=3);
    for _ in 0..n_terms {
        let e1 = rng.gen_range(0..=3u32);
        let e3 = rng.gen_range(0..=2u32);
        let c = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        p.add_term(Monomial([e1, 0, e3, 0]), Rat::from_i64(c));
    }
    if num_traits::Zero::is_zero(&p) {
        p.add_term(Monomial([1, 0, 0, 0]), Rat::from_i64(1));
    }
    Generator::elementary(p).expect("twist uses only x1 and x3")
}

/// Sample `count` generator words of length at most `max_len`, drawing
/// letters from the monomial orthogonal group and random elementary twists.
pub fn sample_words(seed: u64, count: usize, max_len: usize) -> Vec<TameElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monos = monomial_orthogonal_group();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let word: Vec<Letter> = (0..len)
                .map(|_| {
                    let generator = if rng.gen_bool(0.5) {
                        let m = monos[rng.gen_range(0..monos.len())].clone();
                        Generator::orthogonal(m).expect("enumerated matrices preserve q")
                    } else {
                        random_twist(&mut rng)
                    };
                    Letter {
                        generator,
                        inverse: rng.gen_bool(0.5),
                    }
                })
                .collect();
            TameElement::from_word(word)
        })
        .collect()
}
