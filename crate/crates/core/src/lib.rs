//! Exact computational-algebra workbench for sigma-normality of finite
//! group rings.
//!
//! Given a finite group G (as a Cayley table), a finite commutative
//! coefficient ring K, an order-2 anti-automorphism sigma of G and a
//! homomorphism f from G into the units of K, the twisted map
//! x = sum a_g g  ->  x^sigma = sum a_g f(g) sigma(g) is an involution of
//! KG exactly when g sigma(g) always lies in the kernel of f. The crate
//! decides whether KG is sigma-normal (x x^sigma = x^sigma x for all x)
//! three independent ways: an O(|G|^2) pairwise reduction, a full
//! exhaustive scan of KG for tiny instances, and a structural classifier
//! that names the shape of (G, sigma, f, K) making the ring normal and
//! emits re-verifiable witnesses.

pub mod algebra;
pub mod catalog;
pub mod checker;
pub mod classifier;
pub mod error;
pub mod group;
pub mod lemmas;
pub mod morphism;
pub mod ring;
pub mod subgroup;

pub use algebra::{GroupAlgebra, GroupRingElement};
pub use checker::{check_exhaustive, check_pairwise, CheckMethod, NormalityVerdict, Witness};
pub use classifier::{
    classify, detect_sigma_group, fixed_and_moved_sets, lemma2_case, ClassificationCertificate,
    Lemma2Case, SigmaGroupWitness, TheoremCase,
};
pub use error::{Error, Result};
pub use group::{ElementSubset, Group};
pub use morphism::{AntiAutomorphism, InvolutionSpec, UnitHomomorphism};
pub use ring::{make_ring, CoeffRing};
