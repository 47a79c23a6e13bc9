//! Purity of submodules, decided against finite test families.
//!
//! `K -> V` is `W`-pure when `K (x) W -> V (x) W` stays injective. Over a
//! field every submodule is pure. Over `Z/n` every finitely presented module
//! is a sum of cyclics `Z/d` with `d | n`, so those form a complete family.
//! Over `Z` purity only needs checking at `Z/d` for divisors `d` of the
//! exponent of the torsion of `V/K`: primes not dividing that torsion are
//! automatic, and purity at `p^e` for the top power `e` present in the
//! torsion implies purity at every higher power.
//!
//! A kernel `K = ker(V -> V')` is sequence-pure when the whole sequence
//! `0 -> K -> V -> V'` stays exact after `(x) W`. This needs the image of `V`
//! to be pure in `V'` as well, which injectivity at `K` alone does not give
//! over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::module::{ModuleMap, PresentedModule};
use crate::ring::{Ring, RingDescriptor};

/// Named test modules.
pub type TestModules<R> = Vec<(String, PresentedModule<R>)>;

/// Which modules to test against.
#[derive(Debug, Clone)]
pub enum PurityMode<R: Ring> {
    AgainstFamily(TestModules<R>),
    Complete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityTest {
    pub module: String,
    pub injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityCertificate {
    pub ring: RingDescriptor,
    pub complete: bool,
    pub pure: bool,
    pub tests: Vec<PurityTest>,
    pub note: String,
}

impl PurityCertificate {
    pub fn first_failure(&self) -> Option<&PurityTest> {
        self.tests.iter().find(|t| !t.injective)
    }
}

pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let other = n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The complete cyclic test family for `K` inside its ambient module.
pub fn complete_family<R: Ring>(k: &PresentedModule<R>) -> Result<(TestModules<R>, String)> {
    let incl = k.inclusion().ok_or_else(|| Error::NotWellDefined("purity test needs an ambient".into()))?;
    Ok(complete_family_for(k.ring(), &[&incl]))
}

/// A cyclic family complete for `W`-injectivity of every map in `maps` at once.
pub fn complete_family_for<R: Ring>(ring: &R, maps: &[&ModuleMap<R>]) -> (TestModules<R>, String) {
    let cyclics = |ds: Vec<BigInt>| -> TestModules<R> {
        ds.into_iter()
            .filter(|d| !d.is_one())
            .map(|d| {
                let e = ring.from_rational(&num_rational::BigRational::from_integer(d.clone())).expect("integer");
                (format!("Z/{d}"), PresentedModule::cyclic(ring, &e))
            })
            .collect()
    };
    match ring.descriptor() {
        RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => {
            (Vec::new(), "field: every submodule is pure".into())
        }
        RingDescriptor::IntegersMod(n) => {
            (cyclics(divisors(&BigInt::from(n))), format!("cyclic Z/d for every divisor d > 1 of {n}"))
        }
        RingDescriptor::Integers => {
            let mut exp = BigInt::one();
            for f in maps {
                if let Some(e) = f.cokernel().0.structure().torsion.last() {
                    exp = exp.lcm(&ring.to_integer(e).expect("integer invariant factor"));
                }
            }
            if exp.is_one() {
                return (Vec::new(), "cokernels are torsion-free".into());
            }
            let note = format!("cyclic Z/d for every divisor d > 1 of the cokernel torsion exponent {exp}");
            (cyclics(divisors(&exp)), note)
        }
    }
}

/// Is `K (x) W -> V (x) W` injective?
pub fn is_w_pure<R: Ring>(incl: &ModuleMap<R>, w: &PresentedModule<R>) -> bool {
    incl.tensor(&ModuleMap::identity(w)).is_injective()
}

/// `V / K -> V'` induced by `alpha` for the kernel inclusion `K -> V`.
pub fn image_inclusion<R: Ring>(incl: &ModuleMap<R>, alpha: &ModuleMap<R>) -> ModuleMap<R> {
    let v = alpha.domain();
    let rels = v.relations().vstack(&incl.matrix().transpose());
    let quotient = PresentedModule::new(v.ring(), v.gens(), &rels);
    ModuleMap::new_unchecked(&quotient, alpha.codomain(), alpha.matrix().clone())
}

/// `0 -> K -> V -> V'` stays exact after `(x) W`: `K` is `W`-pure in `V` and the image of `V` is `W`-pure in `V'`.
pub fn is_sequence_w_pure<R: Ring>(incl: &ModuleMap<R>, alpha: &ModuleMap<R>, w: &PresentedModule<R>) -> bool {
    is_w_pure(incl, w) && is_w_pure(&image_inclusion(incl, alpha), w)
}

pub fn purity_test<R: Ring>(k: &PresentedModule<R>, mode: &PurityMode<R>) -> Result<PurityCertificate> {
    let ring = k.ring();
    let incl = k.inclusion().ok_or_else(|| Error::NotWellDefined("purity test needs an ambient".into()))?;
    let (family, complete, note) = match mode {
        PurityMode::AgainstFamily(fam) => {
            if let Some((_, w)) = fam.iter().find(|(_, w)| w.ring() != ring) {
                return Err(Error::RingMismatch(ring.descriptor(), w.ring().descriptor()));
            }
            (fam.clone(), false, "caller-supplied family".to_string())
        }
        PurityMode::Complete => {
            let (fam, note) = complete_family(k)?;
            (fam, true, note)
        }
    };
    let tests: Vec<PurityTest> =
        family.iter().map(|(name, w)| PurityTest { module: name.clone(), injective: is_w_pure(&incl, w) }).collect();
    Ok(PurityCertificate {
        ring: ring.descriptor(),
        complete,
        pure: tests.iter().all(|t| t.injective),
        tests,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::ring::{Integers, IntegersMod, Rationals};
    use num_traits::ToPrimitive;

    fn sub<R: Ring>(ring: &R, ambient: usize, cols: &[i64], k: usize) -> PresentedModule<R> {
        PresentedModule::free(ring, k)
            .with_ambient(PresentedModule::free(ring, ambient), Matrix::from_i64(ring, ambient, k, cols))
            .unwrap()
    }

    #[test]
    fn two_z_in_z_is_not_pure() {
        let k = sub(&Integers, 1, &[2], 1);
        let c = purity_test(&k, &PurityMode::Complete).unwrap();
        assert!(!c.pure);
        assert_eq!(c.first_failure().unwrap().module, "Z/2");
    }

    #[test]
    fn summand_is_pure() {
        let k = sub(&Integers, 2, &[1, 0], 1);
        assert!(purity_test(&k, &PurityMode::Complete).unwrap().pure);
        let fam = (2..6).map(|d| (format!("Z/{d}"), PresentedModule::cyclic(&Integers, &BigInt::from(d)))).collect();
        assert!(purity_test(&k, &PurityMode::AgainstFamily(fam)).unwrap().pure);
    }

    #[test]
    fn field_is_always_pure() {
        let k = sub(&Rationals, 2, &[2, 3], 1);
        let c = purity_test(&k, &PurityMode::Complete).unwrap();
        assert!(c.pure && c.tests.is_empty());
    }

    #[test]
    fn two_z4_in_z4_is_not_pure() {
        let r = IntegersMod::new(4).unwrap();
        let k = PresentedModule::cyclic(&r, &2)
            .with_ambient(PresentedModule::free(&r, 1), Matrix::from_i64(&r, 1, 1, &[2]))
            .unwrap();
        let c = purity_test(&k, &PurityMode::Complete).unwrap();
        assert!(!c.pure);
    }

    #[test]
    fn divisor_listing() {
        let d: Vec<i64> = divisors(&BigInt::from(12)).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
