//! Decides sigma-normality of KG.
//!
//! `check_pairwise` is the workhorse: the normality equation for all of KG
//! expands K-bilinearly into one term per element ("diagonal") and one per
//! unordered pair ("cross"), and specializing coefficients to 0/1 shows
//! each term must vanish independently. So KG is sigma-normal iff
//!
//!   * g sigma(g) = sigma(g) g in G for every g, and
//!   * f(h)(g sigma(h) - sigma(h) g) + f(g)(h sigma(g) - sigma(g) h) = 0
//!     in KG for every unordered pair {g, h}.
//!
//! The reduction's completeness argument (specializing coefficients to
//! 0/1 isolates each term) is guarded empirically rather than trusted:
//! `check_exhaustive` evaluates the defect of every single element of KG
//! and the oracle-equivalence suite requires the two verdicts to agree
//! on all small instances.

use serde::Serialize;

use crate::algebra::{GroupAlgebra, GroupRingElement};
use crate::error::Result;
use crate::group::Group;
use crate::morphism::InvolutionSpec;
use crate::ring::CoeffRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMethod {
    Pairwise,
    Exhaustive,
}

/// Failure witness. An element g means x = 1*g violates the equation; a
/// pair (g, h) means x = g + h does (given all diagonals pass); a ring
/// element is a direct counterexample from the exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
    RingElement(GroupRingElement),
}

#[derive(Clone, Debug)]
pub struct NormalityVerdict {
    pub normal: bool,
    pub witness: Option<Witness>,
    pub method: CheckMethod,
}

impl NormalityVerdict {
    fn normal(method: CheckMethod) -> NormalityVerdict {
        NormalityVerdict {
            normal: true,
            witness: None,
            method,
        }
    }
}

/// O(|G|^2) decision procedure. Diagonal failures are reported before
/// cross failures; witnesses are the lexicographically first offenders.
pub fn check_pairwise(group: &Group, ring: &CoeffRing, spec: &InvolutionSpec) -> NormalityVerdict {
    let sigma = spec.sigma();
    let f = spec.f();
    for g in group.elements() {
        let s = sigma.apply(g);
        if group.mul(g, s) != group.mul(s, g) {
            return NormalityVerdict {
                normal: false,
                witness: Some(Witness::Element(g)),
                method: CheckMethod::Pairwise,
            };
        }
    }
    // Scratch accumulator for the (at most four-term) cross element.
    let zero = ring.zero();
    let mut scratch = vec![zero; group.order()];
    let mut touched: Vec<usize> = Vec::with_capacity(4);
    for g in group.elements() {
        let sg = sigma.apply(g);
        let fg = f.value(g);
        for h in (g + 1)..group.order() {
            let sh = sigma.apply(h);
            let fh = f.value(h);
            // f(h)*(g sh - sh g) + f(g)*(h sg - sg h)
            let terms = [
                (group.mul(g, sh), fh),
                (group.mul(sh, g), ring.neg(fh)),
                (group.mul(h, sg), fg),
                (group.mul(sg, h), ring.neg(fg)),
            ];
            for (idx, coeff) in terms {
                if scratch[idx] == zero {
                    touched.push(idx);
                }
                scratch[idx] = ring.add(scratch[idx], coeff);
            }
            let mut nonzero = false;
            for &idx in &touched {
                if scratch[idx] != zero {
                    nonzero = true;
                }
                scratch[idx] = zero;
            }
            touched.clear();
            if nonzero {
                return NormalityVerdict {
                    normal: false,
                    witness: Some(Witness::Pair(g, h)),
                    method: CheckMethod::Pairwise,
                };
            }
        }
    }
    NormalityVerdict::normal(CheckMethod::Pairwise)
}

/// Evaluates the normality defect of every element of KG. Bounded to
/// |K|^|G| <= 2^16; the first violating element (in odometer order) is
/// the witness.
pub fn check_exhaustive(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
) -> Result<NormalityVerdict> {
    let algebra = GroupAlgebra::new(group, ring);
    for x in algebra.elements_iter()? {
        if !algebra.is_zero(&algebra.normality_defect(spec, &x)) {
            return Ok(NormalityVerdict {
                normal: false,
                witness: Some(Witness::RingElement(x)),
                method: CheckMethod::Exhaustive,
            });
        }
    }
    Ok(NormalityVerdict::normal(CheckMethod::Exhaustive))
}

/// Rebuilds the violating group-ring element a witness stands for.
pub fn witness_element(algebra: &GroupAlgebra, witness: &Witness) -> GroupRingElement {
    match witness {
        Witness::Element(g) => algebra.basis(*g),
        Witness::Pair(g, h) => algebra.add(&algebra.basis(*g), &algebra.basis(*h)),
        Witness::RingElement(x) => x.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};
    use crate::morphism::{
        enumerate_antiautomorphisms, enumerate_unit_homomorphisms, parse_f_line, parse_sigma_line,
        AntiAutomorphism, InvolutionSpec, UnitHomomorphism,
    };
    use crate::ring::make_ring;

    fn classical_spec(group: &Group, ring: &CoeffRing) -> InvolutionSpec {
        InvolutionSpec::new(
            group,
            ring,
            AntiAutomorphism::classical(group),
            UnitHomomorphism::trivial(group, ring),
        )
        .unwrap()
    }

    #[test]
    fn abelian_groups_are_always_normal() {
        let c6 = cyclic(6).unwrap();
        let z4 = make_ring("Z4").unwrap();
        for sigma in enumerate_antiautomorphisms(&c6).unwrap() {
            for f in enumerate_unit_homomorphisms(&c6, &z4).unwrap() {
                if crate::morphism::compatibility_witness(&c6, &z4, &sigma, &f).is_some() {
                    continue;
                }
                let spec = InvolutionSpec::new(&c6, &z4, sigma.clone(), f).unwrap();
                assert!(check_pairwise(&c6, &z4, &spec).normal);
            }
        }
    }

    #[test]
    fn d4_classical_over_z3_fails_with_pair_witness() {
        let d4 = dihedral(4).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let spec = classical_spec(&d4, &z3);
        let verdict = check_pairwise(&d4, &z3, &spec);
        assert!(!verdict.normal);
        assert_eq!(verdict.witness, Some(Witness::Pair(1, 4)));
        // The witness element really violates the equation.
        let alg = GroupAlgebra::new(&d4, &z3);
        let x = witness_element(&alg, verdict.witness.as_ref().unwrap());
        assert!(!alg.is_zero(&alg.normality_defect(&spec, &x)));
    }

    #[test]
    fn diagonal_failure_yields_element_witness_first() {
        // sigma = inversion composed with conjugation by a reflection is
        // involutive on S3 and sends rs to r^2 s, which does not commute
        // with it: the diagonal check fails before any pair is examined.
        let s3 = dihedral(3).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let map: Vec<usize> = s3
            .elements()
            .map(|g| s3.inverse(s3.conjugate(g, 3)))
            .collect();
        let sigma = AntiAutomorphism::new(&s3, map).unwrap();
        let f = UnitHomomorphism::trivial(&s3, &z3);
        let spec = InvolutionSpec::new(&s3, &z3, sigma, f).unwrap();
        let verdict = check_pairwise(&s3, &z3, &spec);
        assert!(!verdict.normal);
        let Some(Witness::Element(g)) = verdict.witness else {
            panic!("expected a single-element witness, got {:?}", verdict.witness);
        };
        let alg = GroupAlgebra::new(&s3, &z3);
        let x = witness_element(&alg, &Witness::Element(g));
        assert!(!alg.is_zero(&alg.normality_defect(&spec, &x)));
        // The exhaustive oracle agrees.
        assert!(!check_exhaustive(&s3, &z3, &spec).unwrap().normal);
    }

    #[test]
    fn d4_classical_over_z2_is_normal_and_matches_oracle() {
        let d4 = dihedral(4).unwrap();
        let z2 = make_ring("Z2").unwrap();
        let spec = classical_spec(&d4, &z2);
        let fast = check_pairwise(&d4, &z2, &spec);
        assert!(fast.normal);
        let slow = check_exhaustive(&d4, &z2, &spec).unwrap();
        assert!(slow.normal);
    }

    #[test]
    fn s3_classical_matches_oracle_over_z2() {
        let s3 = dihedral(3).unwrap();
        let z2 = make_ring("Z2").unwrap();
        let spec = classical_spec(&s3, &z2);
        let fast = check_pairwise(&s3, &z2, &spec);
        let slow = check_exhaustive(&s3, &z2, &spec).unwrap();
        assert_eq!(fast.normal, slow.normal);
    }

    #[test]
    fn s3_twisted_spec_is_normal_over_z3_exhaustively() {
        let s3 = dihedral(3).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let sigma = parse_sigma_line(&s3, "0 2 1 3 4 5").unwrap();
        let f = parse_f_line(&s3, &z3, "1 1 1 2 2 2").unwrap();
        let spec = InvolutionSpec::new(&s3, &z3, sigma, f).unwrap();
        assert!(check_pairwise(&s3, &z3, &spec).normal);
        assert!(check_exhaustive(&s3, &z3, &spec).unwrap().normal);
    }

    #[test]
    fn exhaustive_witness_reverifies() {
        let d4 = dihedral(4).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let spec = classical_spec(&d4, &z3);
        let verdict = check_exhaustive(&d4, &z3, &spec).unwrap();
        assert!(!verdict.normal);
        let alg = GroupAlgebra::new(&d4, &z3);
        let x = witness_element(&alg, verdict.witness.as_ref().unwrap());
        assert!(!alg.is_zero(&alg.normality_defect(&spec, &x)));
    }

    #[test]
    fn verdict_invariant_under_f4_frobenius() {
        // Composing f with the Frobenius x -> x^2 of F4 must not change
        // the verdict.
        let frobenius = [0usize, 1, 3, 2];
        let f4 = make_ring("F4").unwrap();
        for group in [dihedral(3).unwrap(), dihedral(4).unwrap(), cyclic(6).unwrap()] {
            for sigma in enumerate_antiautomorphisms(&group).unwrap() {
                for f in enumerate_unit_homomorphisms(&group, &f4).unwrap() {
                    if crate::morphism::compatibility_witness(&group, &f4, &sigma, &f).is_some() {
                        continue;
                    }
                    let twisted: Vec<usize> =
                        f.values().iter().map(|&v| frobenius[v]).collect();
                    let f2 = UnitHomomorphism::new(&group, &f4, twisted).unwrap();
                    let spec1 =
                        InvolutionSpec::new(&group, &f4, sigma.clone(), f.clone()).unwrap();
                    let spec2 = InvolutionSpec::new(&group, &f4, sigma.clone(), f2).unwrap();
                    assert_eq!(
                        check_pairwise(&group, &f4, &spec1).normal,
                        check_pairwise(&group, &f4, &spec2).normal
                    );
                }
            }
        }
    }
}
