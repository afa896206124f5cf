use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;
use crate::Rat;

/// Names of the stabilizer parameters, in storage order.
pub const PARAM_NAMES: [&str; 8] = ["a", "b", "c", "d", "a'", "b'", "c'", "d'"];

/// Indices of the unit parameters (those allowed negative exponents).
pub const UNIT_PARAMS: [usize; 4] = [0, 1, 4, 5];

/// Exponent vector over the parameters `a, b, c, d, a', b', c', d'`.
///
/// `a`, `b`, `a'`, `b'` are invertible, so their exponents may be negative;
/// `c`, `d`, `c'`, `d'` must have non-negative exponents.
pub type ParamExp = [i32; 8];

fn exp_is_valid(e: &ParamExp) -> bool {
    e[2] >= 0 && e[3] >= 0 && e[6] >= 0 && e[7] >= 0
}

fn exp_degree(e: &ParamExp) -> i64 {
    e.iter().map(|&x| x as i64).sum()
}

/// Display key: total degree descending, then exponent vector descending.
fn display_order(a: &ParamExp, b: &ParamExp) -> std::cmp::Ordering {
    exp_degree(b)
        .cmp(&exp_degree(a))
        .then_with(|| b.cmp(a))
}

/// Laurent polynomial over the rationals in the eight stabilizer parameters.
///
/// Used as the coefficient ring when polynomial identities must hold for a
/// whole parametric family at once.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ParamCoeff {
    terms: BTreeMap<ParamExp, Rat>,
}

impl ParamCoeff {
    pub fn new() -> Self {
        ParamCoeff {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = ParamCoeff::new();
        p.add_term([0; 8], c);
        p
    }

    /// The monomial `param^e`. Negative `e` requires an invertible parameter.
    pub fn param_pow(idx: usize, e: i32) -> Self {
        let mut exps = [0i32; 8];
        exps[idx] = e;
        assert!(
            exp_is_valid(&exps),
            "negative exponent on non-invertible parameter {}",
            PARAM_NAMES[idx]
        );
        let mut p = ParamCoeff::new();
        p.add_term(exps, Rat::one());
        p
    }

    pub fn param(idx: usize) -> Self {
        Self::param_pow(idx, 1)
    }

    pub fn monomial(exps: ParamExp, c: Rat) -> Self {
        assert!(exp_is_valid(&exps), "invalid Laurent exponents");
        let mut p = ParamCoeff::new();
        p.add_term(exps, c);
        p
    }

    pub fn add_term(&mut self, e: ParamExp, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(exp_is_valid(&e));
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamExp, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Evaluate at rational parameter values. `None` if a negative power of a
    /// zero value is required.
    pub fn eval(&self, vals: &[Rat; 8]) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..8 {
                match e[i].cmp(&0) {
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Greater => {
                        for _ in 0..e[i] {
                            t *= vals[i].clone();
                        }
                    }
                    std::cmp::Ordering::Less => {
                        if vals[i].is_zero() {
                            return None;
                        }
                        let inv = vals[i].recip();
                        for _ in 0..(-e[i]) {
                            t *= inv.clone();
                        }
                    }
                }
            }
            acc += t;
        }
        Some(acc)
    }
}

impl Default for ParamCoeff {
    fn default() -> Self {
        Self::new()
    }
}

impl Zero for ParamCoeff {
    fn zero() -> Self {
        ParamCoeff::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamCoeff {
    fn one() -> Self {
        ParamCoeff::constant(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0; 8])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }
}

impl Add for ParamCoeff {
    type Output = ParamCoeff;
    fn add(self, rhs: ParamCoeff) -> ParamCoeff {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for ParamCoeff {
    type Output = ParamCoeff;
    fn sub(self, rhs: ParamCoeff) -> ParamCoeff {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for ParamCoeff {
    type Output = ParamCoeff;
    fn neg(self) -> ParamCoeff {
        let mut out = ParamCoeff::new();
        for (e, c) in self.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for ParamCoeff {
    type Output = ParamCoeff;
    fn mul(self, rhs: ParamCoeff) -> ParamCoeff {
        let mut out = ParamCoeff::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = [0i32; 8];
                for i in 0..8 {
                    e[i] = e1[i] + e2[i];
                }
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Scalar for ParamCoeff {
    fn from_i64(n: i64) -> Self {
        ParamCoeff::constant(Rat::from_i64(n))
    }

    fn display_negative(&self) -> bool {
        // Single-term values render with their sign pulled out; multi-term
        // values are parenthesized and never "negative" as a whole.
        if self.terms.len() == 1 {
            self.terms.values().next().unwrap().is_negative()
        } else {
            false
        }
    }

    fn coeff_string(&self) -> Option<String> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            let mono = exp_string(e);
            let c = c.abs();
            match (c.is_one(), mono.is_empty()) {
                (true, true) => None,
                (true, false) => Some(mono),
                (false, true) => Some(c.to_string()),
                (false, false) => Some(format!("{c}*{mono}")),
            }
        } else {
            Some(format!("({self})"))
        }
    }
}

fn exp_string(e: &ParamExp) -> String {
    let mut parts = Vec::new();
    for i in 0..8 {
        match e[i] {
            0 => {}
            1 => parts.push(PARAM_NAMES[i].to_string()),
            k => parts.push(format!("{}^{}", PARAM_NAMES[i], k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for ParamCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&ParamExp> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_order(a, b));
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = exp_string(e);
            let a = c.abs();
            match (a.is_one(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}
