//! Dirichlet characters of odd modulus, with exact cyclotomic values.
//!
//! Characters mod d are indexed by exponent vectors relative to a fixed
//! generator of each cyclic factor of the unit group (the smallest
//! primitive root of each odd prime power), which makes the enumeration
//! order deterministic and reproducible. Discrete logarithms are direct
//! tables, which is plenty at the moduli this crate targets.

use num::integer::{gcd, lcm};
use thiserror::Error;

use crate::exactnum::arith::{euler_phi, factorize};
use crate::exactnum::{CyclotomicElement, Rational};

#[derive(Debug, Error)]
pub enum CharacterError {
    #[error("modulus must be odd, got {0}")]
    EvenModulus(u64),
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(u64),
    #[error("no character with index {index} mod {modulus} (there are {count})")]
    BadIndex {
        modulus: u64,
        index: usize,
        count: usize,
    },
}

/// One cyclic factor (Z/q^e)^* of the unit group, with its generator and a
/// discrete-log table indexed by residue.
#[derive(Clone, Debug)]
pub struct CyclicFactor {
    pub prime: u64,
    pub exponent: u32,
    pub prime_power: u64,
    pub generator: u64,
    /// phi(q^e), the order of the generator.
    pub order: u64,
    dlog: Vec<Option<u64>>,
}

impl CyclicFactor {
    fn build(prime: u64, exponent: u32) -> CyclicFactor {
        let prime_power = prime.pow(exponent);
        let order = euler_phi(prime_power);
        let generator = (2..prime_power)
            .filter(|g| g % prime != 0)
            .find(|&g| multiplicative_order(g, prime_power) == order)
            .expect("odd prime powers have primitive roots");
        let mut dlog = vec![None; prime_power as usize];
        let mut value = 1u64;
        for t in 0..order {
            dlog[value as usize] = Some(t);
            value = value * generator % prime_power;
        }
        CyclicFactor {
            prime,
            exponent,
            prime_power,
            generator,
            order,
            dlog,
        }
    }

    /// Discrete log base the generator, for residues coprime to the prime.
    pub fn dlog(&self, n: u64) -> Option<u64> {
        self.dlog[(n % self.prime_power) as usize]
    }
}

fn multiplicative_order(g: u64, modulus: u64) -> u64 {
    let mut value = g % modulus;
    let mut order = 1;
    while value != 1 {
        value = value * g % modulus;
        order += 1;
    }
    order
}

/// The unit group (Z/dZ)^* of an odd modulus, split into cyclic factors.
#[derive(Clone, Debug)]
pub struct UnitGroupStructure {
    modulus: u64,
    factors: Vec<CyclicFactor>,
}

impl UnitGroupStructure {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn factors(&self) -> &[CyclicFactor] {
        &self.factors
    }

    /// The group exponent: lcm of the cyclic factor orders.
    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, f| lcm(acc, f.order))
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }
}

/// Splits the unit group mod an odd `d` into cyclic factors with verified
/// generators.
pub fn unit_group(d: u64) -> Result<UnitGroupStructure, CharacterError> {
    if d < 1 {
        return Err(CharacterError::NonPositiveModulus(d));
    }
    if d.is_multiple_of(2) {
        return Err(CharacterError::EvenModulus(d));
    }
    let factors = factorize(d)
        .into_iter()
        .map(|(p, e)| CyclicFactor::build(p, e))
        .collect();
    Ok(UnitGroupStructure {
        modulus: d,
        factors,
    })
}

/// A Dirichlet character mod an odd `d`, stored as a full value table over
/// `0..d` with entries in Q(zeta_m) for m the order of the character.
#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    modulus: u64,
    exponents: Vec<u64>,
    order: u32,
    values: Vec<CyclotomicElement>,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.exponents == other.exponents
    }
}

impl DirichletCharacter {
    fn build(group: &UnitGroupStructure, exponents: Vec<u64>) -> DirichletCharacter {
        let d = group.modulus();
        // Order of the character: lcm over factors of phi_i / gcd(phi_i, k_i).
        let mut order = 1u64;
        let mut factor_orders = Vec::with_capacity(group.factors().len());
        for (factor, &k) in group.factors().iter().zip(&exponents) {
            let o = factor.order / gcd(factor.order, k);
            factor_orders.push(o);
            order = lcm(order, o);
        }
        let m = order as u32;

        let mut values = Vec::with_capacity(d as usize);
        for n in 0..d {
            if gcd(n, d) != 1 {
                values.push(CyclotomicElement::zero(m));
                continue;
            }
            // chi(n) = zeta_m ^ sum_i (m / o_i) * k'_i * dlog_i(n),
            // where k_i = (phi_i / o_i) * k'_i.
            let mut e = 0u64;
            for ((factor, &k), &o) in group.factors().iter().zip(&exponents).zip(&factor_orders) {
                let t = factor.dlog(n).expect("units have discrete logarithms");
                let k_reduced = k / (factor.order / o);
                e = (e + (order / o) * ((k_reduced * t) % o)) % order;
            }
            values.push(CyclotomicElement::root_of_unity(m, e as i64));
        }
        DirichletCharacter {
            modulus: d,
            exponents,
            order: m,
            values,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent vector relative to the per-factor generators.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// The least m with the m-th power of this character trivial; values
    /// live in Q(zeta_m).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// The value at any integer, via reduction mod the modulus. Zero
    /// exactly on arguments sharing a factor with the modulus.
    pub fn value(&self, n: i64) -> CyclotomicElement {
        let idx = n.rem_euclid(self.modulus as i64) as usize;
        self.values[idx].clone()
    }

    /// The smallest f dividing the modulus such that the character only
    /// depends on its argument mod f (on units).
    pub fn conductor(&self) -> u64 {
        let d = self.modulus;
        let one = CyclotomicElement::one(self.order);
        'outer: for f in crate::exactnum::arith::divisors(d) {
            // chi has period f iff it is trivial on units congruent
            // to 1 mod f.
            for u in (1..d).filter(|&u| gcd(u, d) == 1 && u % f == 1 % f) {
                if self.values[u as usize] != one {
                    continue 'outer;
                }
            }
            return f;
        }
        d
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// chi(-1) as an integer sign (+1 or -1); +1 for modulus 1.
    pub fn parity(&self) -> i8 {
        let v = self
            .value(self.modulus as i64 - 1)
            .as_rational()
            .expect("chi(-1) is rational");
        if v == Rational::one() {
            1
        } else {
            -1
        }
    }
}

/// All phi(d) characters mod an odd `d`, trivial character first, in the
/// deterministic exponent-vector order (first factor varies fastest).
pub fn enumerate_characters(d: u64) -> Result<Vec<DirichletCharacter>, CharacterError> {
    let group = unit_group(d)?;
    let radices: Vec<u64> = group.factors().iter().map(|f| f.order).collect();
    let count = radices.iter().product::<u64>() as usize;
    let mut out = Vec::with_capacity(count);
    let mut exponents = vec![0u64; radices.len()];
    loop {
        out.push(DirichletCharacter::build(&group, exponents.clone()));
        // Odometer increment, first factor fastest.
        let mut i = 0;
        loop {
            if i == radices.len() {
                return Ok(out);
            }
            exponents[i] += 1;
            if exponents[i] < radices[i] {
                break;
            }
            exponents[i] = 0;
            i += 1;
        }
    }
}

/// Looks up one character by `(modulus, index)` in enumeration order.
pub fn character_by_index(d: u64, index: usize) -> Result<DirichletCharacter, CharacterError> {
    let all = enumerate_characters(d)?;
    let count = all.len();
    all.into_iter().nth(index).ok_or(CharacterError::BadIndex {
        modulus: d,
        index,
        count,
    })
}
