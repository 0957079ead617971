//! Property suites for the four supporting lemmas, run against
//! sigma-normal instances. Each suite returns a per-instance outcome so
//! the sweep harness can report pass/fail/vacuous per lemma.

use serde::Serialize;

use crate::algebra::{GroupAlgebra, GroupRingElement};
use crate::classifier::{CaseWitnesses, ClassificationCertificate, Lemma2Case};
use crate::group::Group;
use crate::morphism::InvolutionSpec;
use crate::ring::CoeffRing;
use crate::subgroup::{center, frattini_subgroup, is_normal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaOutcome {
    Pass,
    Vacuous,
    Skipped,
    Fail(String),
}

impl LemmaOutcome {
    pub fn is_failure(&self) -> bool {
        matches!(self, LemmaOutcome::Fail(_))
    }
}

/// Unit structure: for every unit a of KG, t = a^-1 a^sigma commutes with
/// a and satisfies t^sigma = t^-1. `units` is the full unit list of this
/// KG (so inverses can be taken by Lagrange powers).
pub fn lemma1_unit_structure(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
    units: &[GroupRingElement],
) -> LemmaOutcome {
    let algebra = GroupAlgebra::new(group, ring);
    let m = units.len();
    for a in units {
        let a_inv = algebra.unit_inverse(a, m);
        let a_sigma = algebra.apply_involution(spec, a);
        let t = algebra.mul(&a_inv, &a_sigma);
        if algebra.mul(a, &t) != algebra.mul(&t, a) {
            return LemmaOutcome::Fail(format!(
                "t does not commute with unit [{}]",
                algebra.format_element(a)
            ));
        }
        let t_sigma = algebra.apply_involution(spec, &t);
        let t_inv = algebra.unit_inverse(&t, m);
        if t_sigma != t_inv {
            return LemmaOutcome::Fail(format!(
                "t^sigma != t^-1 for unit [{}]",
                algebra.format_element(a)
            ));
        }
    }
    LemmaOutcome::Pass
}

/// Two-generator coverage: every non-commuting pair must fall in one of
/// the four case bundles.
pub fn lemma2_pair_coverage(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
) -> LemmaOutcome {
    if group.is_abelian() {
        return LemmaOutcome::Vacuous;
    }
    for a in group.elements() {
        for b in (a + 1)..group.order() {
            if group.commute(a, b) {
                continue;
            }
            match crate::classifier::lemma2_case(group, ring, spec, a, b) {
                Ok(Lemma2Case::Violation) => {
                    return LemmaOutcome::Fail(format!("pair ({a},{b}) violates every case"))
                }
                Ok(_) => {}
                Err(e) => return LemmaOutcome::Fail(e.to_string()),
            }
        }
    }
    LemmaOutcome::Pass
}

/// The subgroup generated by the moved set is normal; when it is abelian
/// the certificate must be the index-2 conjugation case.
pub fn lemma3_moved_subgroup(
    group: &Group,
    spec: &InvolutionSpec,
    certificate: &ClassificationCertificate,
) -> LemmaOutcome {
    if group.is_abelian() {
        return LemmaOutcome::Vacuous;
    }
    let sets = crate::classifier::fixed_and_moved_sets(group, spec.sigma());
    match is_normal(group, &sets.moved_closure) {
        Ok(true) => {}
        Ok(false) => return LemmaOutcome::Fail("moved closure is not normal".into()),
        Err(e) => return LemmaOutcome::Fail(e.to_string()),
    }
    let abelian = sets
        .moved_closure
        .iter()
        .all(|g| sets.moved_closure.iter().all(|h| group.commute(g, h)));
    if abelian && certificate.case != crate::classifier::TheoremCase::CaseI {
        return LemmaOutcome::Fail(format!(
            "moved closure abelian but certificate is {}",
            certificate.case.as_str()
        ));
    }
    LemmaOutcome::Pass
}

/// Sigma-group witness properties: Frattini = center = fixed set inside
/// each witness subgroup, the two-valued action on it, and the two-valued
/// action on the centralizer.
pub fn lemma4_witness_properties(
    group: &Group,
    spec: &InvolutionSpec,
    certificate: &ClassificationCertificate,
) -> LemmaOutcome {
    let (pairs, cent) = match &certificate.witnesses {
        CaseWitnesses::CaseIi { pair, centralizer, .. } => {
            (std::slice::from_ref(pair), centralizer)
        }
        CaseWitnesses::CaseIii { pairs, centralizer, .. } => (pairs.as_slice(), centralizer),
        _ => return LemmaOutcome::Vacuous,
    };
    let sigma = spec.sigma();
    for w in pairs {
        let (sub, members) = match group.subgroup_group(&w.subgroup) {
            Ok(v) => v,
            Err(e) => return LemmaOutcome::Fail(e.to_string()),
        };
        let phi = match frattini_subgroup(&sub) {
            Ok(v) => v,
            Err(e) => return LemmaOutcome::Fail(e.to_string()),
        };
        let zeta = center(&sub);
        let fix: Vec<usize> = (0..sub.order())
            .filter(|&i| sigma.apply(members[i]) == members[i])
            .collect();
        if phi.members() != zeta.members() || zeta.members() != fix {
            return LemmaOutcome::Fail(format!(
                "Frattini/center/fixed-set equality fails on witness ({}, {})",
                w.a, w.b
            ));
        }
        for (i, &g) in members.iter().enumerate() {
            let expect = if zeta.contains(i) {
                g
            } else {
                group.mul(g, w.commutator)
            };
            if sigma.apply(g) != expect {
                return LemmaOutcome::Fail(format!("sigma action fails at {g}"));
            }
        }
        // On the centralizer: sigma(c') is c' or c' * commutator.
        for d in cent.iter() {
            let s = sigma.apply(d);
            if s != d && s != group.mul(d, w.commutator) {
                return LemmaOutcome::Fail(format!(
                    "centralizer element {d} is not two-valued under sigma"
                ));
            }
        }
    }
    LemmaOutcome::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;
    use crate::group::{cyclic, dihedral, quaternion};
    use crate::morphism::{AntiAutomorphism, UnitHomomorphism};
    use crate::ring::make_ring;

    #[test]
    fn lemma_suites_on_q8_classical() {
        let q8 = quaternion(8).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let spec = InvolutionSpec::new(
            &q8,
            &z3,
            AntiAutomorphism::classical(&q8),
            UnitHomomorphism::trivial(&q8, &z3),
        )
        .unwrap();
        let cert = classify(&q8, &z3, &spec).unwrap();
        assert!(cert.case.is_normal());

        let algebra = GroupAlgebra::new(&q8, &z3);
        let units = algebra.enumerate_units().unwrap();
        assert_eq!(
            lemma1_unit_structure(&q8, &z3, &spec, &units),
            LemmaOutcome::Pass
        );
        assert_eq!(lemma2_pair_coverage(&q8, &z3, &spec), LemmaOutcome::Pass);
        assert_eq!(lemma3_moved_subgroup(&q8, &spec, &cert), LemmaOutcome::Pass);
        assert_eq!(
            lemma4_witness_properties(&q8, &spec, &cert),
            LemmaOutcome::Pass
        );
    }

    #[test]
    fn lemma_suites_vacuous_on_commutative() {
        let c4 = cyclic(4).unwrap();
        let z2 = make_ring("Z2").unwrap();
        let spec = InvolutionSpec::new(
            &c4,
            &z2,
            AntiAutomorphism::classical(&c4),
            UnitHomomorphism::trivial(&c4, &z2),
        )
        .unwrap();
        let cert = classify(&c4, &z2, &spec).unwrap();
        assert_eq!(lemma2_pair_coverage(&c4, &z2, &spec), LemmaOutcome::Vacuous);
        assert_eq!(lemma3_moved_subgroup(&c4, &spec, &cert), LemmaOutcome::Vacuous);
        assert_eq!(
            lemma4_witness_properties(&c4, &spec, &cert),
            LemmaOutcome::Vacuous
        );
        // Lemma 1 still runs and passes trivially.
        let algebra = GroupAlgebra::new(&c4, &z2);
        let units = algebra.enumerate_units().unwrap();
        assert_eq!(
            lemma1_unit_structure(&c4, &z2, &spec, &units),
            LemmaOutcome::Pass
        );
    }

    #[test]
    fn lemma3_on_s3_instance() {
        let s3 = dihedral(3).unwrap();
        let z2 = make_ring("Z2").unwrap();
        let sigma = crate::morphism::parse_sigma_line(&s3, "0 2 1 3 4 5").unwrap();
        let f = UnitHomomorphism::trivial(&s3, &z2);
        let spec = InvolutionSpec::new(&s3, &z2, sigma, f).unwrap();
        let cert = classify(&s3, &z2, &spec).unwrap();
        assert_eq!(cert.case, crate::classifier::TheoremCase::CaseI);
        assert_eq!(lemma3_moved_subgroup(&s3, &spec, &cert), LemmaOutcome::Pass);
    }
}
