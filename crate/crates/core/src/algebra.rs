//! Arithmetic in the group ring KG: dense coefficient vectors indexed by
//! group elements, convolution products, the twisted involution, the
//! normality defect, and exhaustive unit enumeration for tiny KG.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::morphism::InvolutionSpec;
use crate::ring::CoeffRing;

/// Full-enumeration bound: |K|^|G| must stay within this for element
/// iteration and unit search.
pub const MAX_ENUMERATION: u128 = 1 << 16;

/// An element of KG as a dense vector of ring-element indices, one
/// coefficient per group element. Serializes as the plain literal list in
/// group-index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GroupRingElement {
    coeffs: Vec<usize>,
}

impl GroupRingElement {
    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }
}

/// Carrier context for KG arithmetic. All operations go through one
/// algebra value, which pins the group and coefficient ring together.
pub struct GroupAlgebra<'a> {
    group: &'a Group,
    ring: &'a CoeffRing,
}

impl<'a> GroupAlgebra<'a> {
    pub fn new(group: &'a Group, ring: &'a CoeffRing) -> GroupAlgebra<'a> {
        GroupAlgebra { group, ring }
    }

    pub fn group(&self) -> &Group {
        self.group
    }

    pub fn ring(&self) -> &CoeffRing {
        self.ring
    }

    fn check(&self, x: &GroupRingElement) {
        assert_eq!(
            x.coeffs.len(),
            self.group.order(),
            "group ring element does not belong to this algebra"
        );
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement {
            coeffs: vec![self.ring.zero(); self.group.order()],
        }
    }

    pub fn one(&self) -> GroupRingElement {
        self.basis(self.group.identity())
    }

    /// The basis element 1*g.
    pub fn basis(&self, g: usize) -> GroupRingElement {
        let mut coeffs = vec![self.ring.zero(); self.group.order()];
        coeffs[g] = self.ring.one();
        GroupRingElement { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: Vec<usize>) -> Result<GroupRingElement> {
        if coeffs.len() != self.group.order() {
            return Err(Error::input(format!(
                "expected {} coefficients, got {}",
                self.group.order(),
                coeffs.len()
            )));
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= self.ring.size()) {
            return Err(Error::input(format!(
                "coefficient {bad} is not an element of {}",
                self.ring.label()
            )));
        }
        Ok(GroupRingElement { coeffs })
    }

    pub fn is_zero(&self, x: &GroupRingElement) -> bool {
        x.coeffs.iter().all(|&c| c == self.ring.zero())
    }

    pub fn add(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        self.check(x);
        self.check(y);
        GroupRingElement {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(&a, &b)| self.ring.add(a, b))
                .collect(),
        }
    }

    pub fn neg(&self, x: &GroupRingElement) -> GroupRingElement {
        self.check(x);
        GroupRingElement {
            coeffs: x.coeffs.iter().map(|&a| self.ring.neg(a)).collect(),
        }
    }

    pub fn sub(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        self.add(x, &self.neg(y))
    }

    /// Convolution product: the coefficient of k in x*y is the sum of
    /// a_g b_h over gh = k.
    pub fn mul(&self, x: &GroupRingElement, y: &GroupRingElement) -> GroupRingElement {
        self.check(x);
        self.check(y);
        let zero = self.ring.zero();
        let mut out = vec![zero; self.group.order()];
        for (g, &a) in x.coeffs.iter().enumerate() {
            if a == zero {
                continue;
            }
            for (h, &b) in y.coeffs.iter().enumerate() {
                if b == zero {
                    continue;
                }
                let k = self.group.mul(g, h);
                out[k] = self.ring.add(out[k], self.ring.mul(a, b));
            }
        }
        GroupRingElement { coeffs: out }
    }

    pub fn scalar_mul(&self, k: usize, x: &GroupRingElement) -> GroupRingElement {
        self.check(x);
        GroupRingElement {
            coeffs: x.coeffs.iter().map(|&a| self.ring.mul(k, a)).collect(),
        }
    }

    pub fn pow(&self, x: &GroupRingElement, mut e: usize) -> GroupRingElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The twisted involution: sum a_g g  ->  sum a_g f(g) sigma(g).
    pub fn apply_involution(&self, spec: &InvolutionSpec, x: &GroupRingElement) -> GroupRingElement {
        self.check(x);
        let zero = self.ring.zero();
        let mut out = vec![zero; self.group.order()];
        for (g, &a) in x.coeffs.iter().enumerate() {
            if a == zero {
                continue;
            }
            out[spec.sigma().apply(g)] = self.ring.mul(a, spec.f().value(g));
        }
        GroupRingElement { coeffs: out }
    }

    /// x x^sigma - x^sigma x; zero exactly when x satisfies the normality
    /// equation.
    pub fn normality_defect(&self, spec: &InvolutionSpec, x: &GroupRingElement) -> GroupRingElement {
        let xs = self.apply_involution(spec, x);
        self.sub(&self.mul(x, &xs), &self.mul(&xs, x))
    }

    /// |K|^|G| when within the enumeration bound.
    pub fn element_count(&self) -> Result<u128> {
        let mut count: u128 = 1;
        for _ in 0..self.group.order() {
            count = count
                .checked_mul(self.ring.size() as u128)
                .filter(|&c| c <= MAX_ENUMERATION)
                .ok_or_else(|| {
                    Error::capability(format!(
                        "|{}|^{} exceeds the enumeration bound 2^16",
                        self.ring.label(),
                        self.group.order()
                    ))
                })?;
        }
        Ok(count)
    }

    /// Iterates every element of KG in odometer order (coefficient of
    /// element 0 cycling fastest). Requires `element_count()` to be in
    /// bounds.
    pub fn elements_iter(&self) -> Result<ElementIter<'_>> {
        let total = self.element_count()?;
        Ok(ElementIter {
            algebra: self,
            current: vec![self.ring.zero(); self.group.order()],
            remaining: total,
        })
    }

    /// All invertible elements of KG, by exhaustive scan: x is a unit iff
    /// its left regular representation matrix is invertible over K, which
    /// reduces to invertibility over the residue field(s) of the
    /// characteristic (fields are handled directly).
    pub fn enumerate_units(&self) -> Result<Vec<GroupRingElement>> {
        let mut out = Vec::new();
        let n = self.group.order();
        let mut mat = vec![0usize; n * n];
        for x in self.elements_iter()? {
            // Column h of the matrix is x * basis(h).
            for v in mat.iter_mut() {
                *v = self.ring.zero();
            }
            for (g, &a) in x.coeffs.iter().enumerate() {
                if a == self.ring.zero() {
                    continue;
                }
                for h in 0..n {
                    let row = self.group.mul(g, h);
                    mat[row * n + h] = self.ring.add(mat[row * n + h], a);
                }
            }
            if self.matrix_invertible(&mat, n) {
                out.push(x);
            }
        }
        Ok(out)
    }

    fn matrix_invertible(&self, mat: &[usize], n: usize) -> bool {
        if self.ring.is_field() {
            let mut work = mat.to_vec();
            return field_rank(self.ring, &mut work, n) == n;
        }
        // Composite or prime-power Z/n: invertible iff invertible modulo
        // every prime dividing the characteristic.
        self.ring.char_primes().into_iter().all(|p| {
            let mut work: Vec<u64> = mat.iter().map(|&v| (v % p) as u64).collect();
            prime_rank(&mut work, n, p as u64) == n
        })
    }

    /// Multiplicative inverse of a unit via Lagrange: u^(|U| - 1).
    pub fn unit_inverse(
        &self,
        u: &GroupRingElement,
        unit_count: usize,
    ) -> GroupRingElement {
        self.pow(u, unit_count - 1)
    }

    /// Renders coefficients as space-separated ring literals in group
    /// index order.
    pub fn format_element(&self, x: &GroupRingElement) -> String {
        let parts: Vec<String> = x.coeffs.iter().map(usize::to_string).collect();
        parts.join(" ")
    }

    pub fn parse_element(&self, text: &str) -> Result<GroupRingElement> {
        let coeffs: Vec<usize> = text
            .split_whitespace()
            .map(|tok| self.ring.parse_element(tok))
            .collect::<Result<_>>()?;
        self.from_coeffs(coeffs)
    }
}

pub struct ElementIter<'a> {
    algebra: &'a GroupAlgebra<'a>,
    current: Vec<usize>,
    remaining: u128,
}

impl Iterator for ElementIter<'_> {
    type Item = GroupRingElement;

    fn next(&mut self) -> Option<GroupRingElement> {
        if self.remaining == 0 {
            return None;
        }
        let item = GroupRingElement {
            coeffs: self.current.clone(),
        };
        self.remaining -= 1;
        let size = self.algebra.ring.size();
        for digit in self.current.iter_mut() {
            *digit += 1;
            if *digit < size {
                break;
            }
            *digit = 0;
        }
        Some(item)
    }
}

/// Gaussian elimination rank over a field given by a CoeffRing.
fn field_rank(ring: &CoeffRing, mat: &mut [usize], n: usize) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..n).find(|&r| mat[r * n + col] != ring.zero());
        let Some(p) = pivot else { continue };
        for c in 0..n {
            mat.swap(p * n + c, rank * n + c);
        }
        let inv = ring
            .inv(mat[rank * n + col])
            .expect("nonzero field element is invertible");
        for c in 0..n {
            mat[rank * n + c] = ring.mul(mat[rank * n + c], inv);
        }
        for r in 0..n {
            if r != rank && mat[r * n + col] != ring.zero() {
                let factor = mat[r * n + col];
                for c in 0..n {
                    let sub = ring.mul(factor, mat[rank * n + c]);
                    mat[r * n + c] = ring.sub(mat[r * n + c], sub);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Gaussian elimination rank modulo a prime.
fn prime_rank(mat: &mut [u64], n: usize, p: u64) -> usize {
    let inv_mod = |a: u64| -> u64 {
        // p is tiny; scan.
        (1..p).find(|&b| (a * b) % p == 1).expect("unit mod p")
    };
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..n).find(|&r| !mat[r * n + col].is_multiple_of(p));
        let Some(piv) = pivot else { continue };
        for c in 0..n {
            mat.swap(piv * n + c, rank * n + c);
        }
        let inv = inv_mod(mat[rank * n + col] % p);
        for c in 0..n {
            mat[rank * n + c] = (mat[rank * n + c] * inv) % p;
        }
        for r in 0..n {
            if r != rank && !mat[r * n + col].is_multiple_of(p) {
                let factor = mat[r * n + col] % p;
                for c in 0..n {
                    let sub = (factor * mat[rank * n + c]) % p;
                    mat[r * n + c] = (mat[r * n + c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};
    use crate::morphism::{
        enumerate_antiautomorphisms, enumerate_unit_homomorphisms, AntiAutomorphism,
        InvolutionSpec, UnitHomomorphism,
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
    fn single_term_products() {
        let d4 = dihedral(4).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let alg = GroupAlgebra::new(&d4, &z3);
        for g in d4.elements() {
            for h in d4.elements() {
                let p = alg.mul(&alg.basis(g), &alg.basis(h));
                assert_eq!(p, alg.basis(d4.mul(g, h)));
            }
            assert_eq!(alg.mul(&alg.basis(g), &alg.one()), alg.basis(g));
        }
    }

    #[test]
    fn char2_augmentation_squares_to_zero() {
        let c2 = cyclic(2).unwrap();
        let z2 = make_ring("Z2").unwrap();
        let alg = GroupAlgebra::new(&c2, &z2);
        let x = alg.from_coeffs(vec![1, 1]).unwrap();
        assert!(alg.is_zero(&alg.mul(&x, &x)));
    }

    #[test]
    fn involution_on_basis_elements() {
        let c4 = cyclic(4).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let alg = GroupAlgebra::new(&c4, &z3);
        let spec = classical_spec(&c4, &z3);
        for g in c4.elements() {
            assert_eq!(
                alg.apply_involution(&spec, &alg.basis(g)),
                alg.basis(c4.inverse(g))
            );
        }
    }

    #[test]
    fn s3_spec_involution_moves_rotation() {
        let s3 = dihedral(3).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let sigma = crate::morphism::parse_sigma_line(&s3, "0 2 1 3 4 5").unwrap();
        let f = crate::morphism::parse_f_line(&s3, &z3, "1 1 1 2 2 2").unwrap();
        let spec = InvolutionSpec::new(&s3, &z3, sigma, f).unwrap();
        let alg = GroupAlgebra::new(&s3, &z3);
        assert_eq!(alg.apply_involution(&spec, &alg.basis(1)), alg.basis(2));
    }

    #[test]
    fn involution_is_involutive_for_every_spec() {
        let d4 = dihedral(4).unwrap();
        let z4 = make_ring("Z4").unwrap();
        let alg = GroupAlgebra::new(&d4, &z4);
        for sigma in enumerate_antiautomorphisms(&d4).unwrap() {
            for f in enumerate_unit_homomorphisms(&d4, &z4).unwrap() {
                if crate::morphism::compatibility_witness(&d4, &z4, &sigma, &f).is_some() {
                    continue;
                }
                let spec = InvolutionSpec::new(&d4, &z4, sigma.clone(), f).unwrap();
                for g in d4.elements() {
                    let x = alg.basis(g);
                    let twice = alg.apply_involution(&spec, &alg.apply_involution(&spec, &x));
                    assert_eq!(twice, x);
                }
            }
        }
    }

    #[test]
    fn defect_vanishes_on_commutative_kg() {
        let c6 = cyclic(6).unwrap();
        let z4 = make_ring("Z4").unwrap();
        let alg = GroupAlgebra::new(&c6, &z4);
        let spec = classical_spec(&c6, &z4);
        for x in alg.elements_iter().unwrap().take(500) {
            assert!(alg.is_zero(&alg.normality_defect(&spec, &x)));
        }
    }

    #[test]
    fn d4_defect_example() {
        let d4 = dihedral(4).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let alg = GroupAlgebra::new(&d4, &z3);
        let spec = classical_spec(&d4, &z3);
        // x = a + b with a = rotation 1, b = reflection 4.
        let mut coeffs = vec![0; 8];
        coeffs[1] = 1;
        coeffs[4] = 1;
        let x = alg.from_coeffs(coeffs).unwrap();
        let defect = alg.normality_defect(&spec, &x);
        // 2*ab - 2*a^3 b: index 5 gets 2, index 7 gets -2 = 1 over Z3.
        let mut expected = [0; 8];
        expected[5] = 2;
        expected[7] = 1;
        assert_eq!(defect.coeffs(), &expected[..]);

        let z2 = make_ring("Z2").unwrap();
        let alg2 = GroupAlgebra::new(&d4, &z2);
        let spec2 = classical_spec(&d4, &z2);
        let x2 = alg2.from_coeffs(vec![0, 1, 0, 0, 1, 0, 0, 0]).unwrap();
        assert!(alg2.is_zero(&alg2.normality_defect(&spec2, &x2)));
    }

    #[test]
    fn defect_of_image_is_negated() {
        let d4 = dihedral(4).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let alg = GroupAlgebra::new(&d4, &z3);
        let spec = classical_spec(&d4, &z3);
        for x in alg.elements_iter().unwrap().take(400) {
            let xs = alg.apply_involution(&spec, &x);
            let d1 = alg.normality_defect(&spec, &x);
            let d2 = alg.normality_defect(&spec, &xs);
            assert_eq!(d2, alg.neg(&d1));
        }
    }

    #[test]
    fn unit_enumeration_tiny() {
        let c2 = cyclic(2).unwrap();
        let z2 = make_ring("Z2").unwrap();
        let alg = GroupAlgebra::new(&c2, &z2);
        let units = alg.enumerate_units().unwrap();
        let coeff_sets: Vec<&[usize]> = units.iter().map(|u| u.coeffs()).collect();
        assert_eq!(coeff_sets, vec![&[1, 0][..], &[0, 1][..]]);

        let z3 = make_ring("Z3").unwrap();
        let alg3 = GroupAlgebra::new(&c2, &z3);
        let units3 = alg3.enumerate_units().unwrap();
        assert_eq!(units3.len(), 4);
        // Trivial units alpha * g are present.
        for g in c2.elements() {
            for &a in z3.units() {
                let u = alg3.scalar_mul(a, &alg3.basis(g));
                assert!(units3.contains(&u));
            }
        }
    }

    #[test]
    fn unit_inverses_multiply_to_one() {
        let c4 = cyclic(4).unwrap();
        for label in ["Z4", "F4", "Z6"] {
            let ring = make_ring(label).unwrap();
            let alg = GroupAlgebra::new(&c4, &ring);
            let units = alg.enumerate_units().unwrap();
            let m = units.len();
            for u in units.iter().take(40) {
                let inv = alg.unit_inverse(u, m);
                assert_eq!(alg.mul(u, &inv), alg.one(), "{label}");
                assert_eq!(alg.mul(&inv, u), alg.one(), "{label}");
            }
        }
    }

    #[test]
    fn enumeration_bound_enforced() {
        let d4 = dihedral(4).unwrap();
        let z9 = make_ring("Z9").unwrap();
        let alg = GroupAlgebra::new(&d4, &z9);
        assert!(alg.element_count().is_err());
        assert!(alg.enumerate_units().is_err());
    }

    #[test]
    fn element_text_round_trip() {
        let d4 = dihedral(4).unwrap();
        let z5 = make_ring("Z5").unwrap();
        let alg = GroupAlgebra::new(&d4, &z5);
        let x = alg.from_coeffs(vec![0, 1, 2, 3, 4, 0, 1, 2]).unwrap();
        let text = alg.format_element(&x);
        assert_eq!(alg.parse_element(&text).unwrap(), x);
        assert!(alg.parse_element("0 1 2").is_err());
        assert!(alg.parse_element("0 1 2 3 4 5 6 7").is_err());
    }
}
