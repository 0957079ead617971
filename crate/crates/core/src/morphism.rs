//! Order-2 anti-automorphisms, unit homomorphisms, and the compatibility
//! condition that makes the twisted map an involution of the group ring.
//!
//! Enumeration strategy: every anti-automorphism factors as
//! inversion composed with an automorphism, so the search space for the
//! order-2 anti-automorphisms is Aut(G), enumerated by generator-image
//! backtracking with incremental multiplicative closure. Unit
//! homomorphisms are enumerated the same way with images in U(K).

use crate::error::{Error, Result};
use crate::group::{ElementSubset, Group};
use crate::ring::CoeffRing;

pub const MAX_ENUMERATION_ORDER: usize = 32;

const UNSET: usize = usize::MAX;

/// An order <= 2 anti-automorphism of a group, stored as the image of each
/// element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiAutomorphism {
    map: Vec<usize>,
}

impl AntiAutomorphism {
    /// Validates anti-multiplicativity, involutivity and bijectivity.
    pub fn new(group: &Group, map: Vec<usize>) -> Result<AntiAutomorphism> {
        let n = group.order();
        if map.len() != n {
            return Err(Error::input(format!(
                "sigma map has {} entries, group has order {n}",
                map.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n {
                return Err(Error::input(format!("sigma image {v} out of range")));
            }
            if seen[v] {
                return Err(Error::input(format!("sigma is not a bijection: {v} repeats")));
            }
            seen[v] = true;
        }
        for g in 0..n {
            if map[map[g]] != g {
                return Err(Error::input(format!(
                    "sigma is not involutive at element {g}"
                )));
            }
            for h in 0..n {
                if map[group.mul(g, h)] != group.mul(map[h], map[g]) {
                    return Err(Error::input(format!(
                        "sigma is not anti-multiplicative at ({g},{h})"
                    )));
                }
            }
        }
        Ok(AntiAutomorphism { map })
    }

    /// The classical involution g -> g^-1.
    pub fn classical(group: &Group) -> AntiAutomorphism {
        AntiAutomorphism {
            map: group.elements().map(|g| group.inverse(g)).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_fixed(&self, g: usize) -> bool {
        self.map[g] == g
    }

    pub fn fixed_set(&self) -> ElementSubset {
        ElementSubset::new(
            (0..self.map.len())
                .filter(|&g| self.map[g] == g)
                .collect(),
        )
    }
}

/// A homomorphism from a group into the unit group of a coefficient ring,
/// stored as one ring element per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitHomomorphism {
    values: Vec<usize>,
}

impl UnitHomomorphism {
    pub fn new(group: &Group, ring: &CoeffRing, values: Vec<usize>) -> Result<UnitHomomorphism> {
        let n = group.order();
        if values.len() != n {
            return Err(Error::input(format!(
                "f has {} values, group has order {n}",
                values.len()
            )));
        }
        for (g, &v) in values.iter().enumerate() {
            if v >= ring.size() {
                return Err(Error::input(format!("f({g}) = {v} is not a ring element")));
            }
            if !ring.is_unit(v) {
                return Err(Error::input(format!("f({g}) = {v} is not a unit of {}", ring.label())));
            }
        }
        if values[group.identity()] != ring.one() {
            return Err(Error::input("f(identity) must be 1"));
        }
        for g in 0..n {
            for h in 0..n {
                if values[group.mul(g, h)] != ring.mul(values[g], values[h]) {
                    return Err(Error::input(format!(
                        "f is not multiplicative at ({g},{h})"
                    )));
                }
            }
        }
        Ok(UnitHomomorphism { values })
    }

    pub fn trivial(group: &Group, ring: &CoeffRing) -> UnitHomomorphism {
        UnitHomomorphism {
            values: vec![ring.one(); group.order()],
        }
    }

    #[inline]
    pub fn value(&self, g: usize) -> usize {
        self.values[g]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_trivial(&self, ring: &CoeffRing) -> bool {
        self.values.iter().all(|&v| v == ring.one())
    }
}

/// A validated (sigma, f) pair: possession of a value of this type means
/// the twisted map x -> sum a_g f(g) sigma(g) is an involution of KG,
/// i.e. g sigma(g) lies in the kernel of f for every g.
#[derive(Clone, Debug)]
pub struct InvolutionSpec {
    sigma: AntiAutomorphism,
    f: UnitHomomorphism,
}

impl InvolutionSpec {
    pub fn new(
        group: &Group,
        ring: &CoeffRing,
        sigma: AntiAutomorphism,
        f: UnitHomomorphism,
    ) -> Result<InvolutionSpec> {
        // Re-validate against this exact carrier pair so a spec can never
        // be smuggled across groups of equal order.
        let sigma = AntiAutomorphism::new(group, sigma.map)?;
        let f = UnitHomomorphism::new(group, ring, f.values)?;
        if let Some(g) = compatibility_witness(group, ring, &sigma, &f) {
            return Err(Error::input(format!(
                "(sigma, f) is not an involution spec: f(g sigma(g)) != 1 at g = {g}"
            )));
        }
        Ok(InvolutionSpec { sigma, f })
    }

    pub fn sigma(&self) -> &AntiAutomorphism {
        &self.sigma
    }

    pub fn f(&self) -> &UnitHomomorphism {
        &self.f
    }
}

/// First g with f(g sigma(g)) != 1, if any. `None` means the pair defines
/// an involution of KG.
pub fn compatibility_witness(
    group: &Group,
    ring: &CoeffRing,
    sigma: &AntiAutomorphism,
    f: &UnitHomomorphism,
) -> Option<usize> {
    group
        .elements()
        .find(|&g| f.value(group.mul(g, sigma.apply(g))) != ring.one())
}

/// Lexicographically-least generating set of minimal size.
pub fn minimal_generating_set(group: &Group) -> Vec<usize> {
    if group.order() == 1 {
        return Vec::new();
    }
    fn search(group: &Group, chosen: &mut Vec<usize>, from: usize, left: usize) -> bool {
        let closed = group.closure(chosen);
        if closed.len() == group.order() {
            return true;
        }
        if left == 0 {
            return false;
        }
        for x in from..group.order() {
            if closed.binary_search(&x).is_ok() {
                continue;
            }
            chosen.push(x);
            if search(group, chosen, x + 1, left - 1) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    for k in 1..=group.order() {
        let mut chosen = Vec::new();
        if search(group, &mut chosen, 1, k) {
            return chosen;
        }
    }
    unreachable!("the full element list generates")
}

/// How images multiply during partial-map closure.
enum ImageSide<'a> {
    Straight(&'a Group),
    Reversed(&'a Group),
    Ring(&'a CoeffRing),
}

impl ImageSide<'_> {
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            ImageSide::Straight(g) => g.mul(a, b),
            ImageSide::Reversed(g) => g.mul(b, a),
            ImageSide::Ring(r) => r.mul(a, b),
        }
    }

    fn identity_image(&self) -> usize {
        match self {
            ImageSide::Straight(g) | ImageSide::Reversed(g) => g.identity(),
            ImageSide::Ring(r) => r.one(),
        }
    }
}

/// Partial map from a group into an image algebra, closed under products.
/// Assignments either extend the closure consistently or report a
/// conflict; the trail supports backtracking.
struct Extender<'a> {
    group: &'a Group,
    side: ImageSide<'a>,
    injective: bool,
    image: Vec<usize>,
    used: Vec<bool>,
    defined: Vec<usize>,
}

impl<'a> Extender<'a> {
    fn new(group: &'a Group, side: ImageSide<'a>, injective: bool) -> Extender<'a> {
        let used_len = match &side {
            ImageSide::Straight(g) | ImageSide::Reversed(g) => g.order(),
            ImageSide::Ring(r) => r.size(),
        };
        let mut ext = Extender {
            group,
            side,
            injective,
            image: vec![UNSET; group.order()],
            used: vec![false; used_len],
            defined: Vec::new(),
        };
        let e = group.identity();
        let ie = ext.side.identity_image();
        ext.image[e] = ie;
        ext.used[ie] = true;
        ext.defined.push(e);
        ext
    }

    fn snapshot(&self) -> usize {
        self.defined.len()
    }

    fn rollback(&mut self, snap: usize) {
        for &e in &self.defined[snap..] {
            self.used[self.image[e]] = false;
            self.image[e] = UNSET;
        }
        self.defined.truncate(snap);
    }

    fn define(&mut self, g: usize, y: usize) -> bool {
        if self.image[g] != UNSET {
            return self.image[g] == y;
        }
        if self.injective && self.used[y] {
            return false;
        }
        self.image[g] = y;
        self.used[y] = true;
        self.defined.push(g);
        true
    }

    /// Assigns `g -> y` and closes under products against everything
    /// already defined. Returns false (leaving a partial trail for the
    /// caller to roll back) on any inconsistency.
    fn assign(&mut self, g: usize, y: usize) -> bool {
        if !self.define(g, y) {
            return false;
        }
        let mut cursor = self.defined.len() - 1;
        while cursor < self.defined.len() {
            let u = self.defined[cursor];
            let iu = self.image[u];
            let mut j = 0;
            while j < self.defined.len() {
                let v = self.defined[j];
                let iv = self.image[v];
                let w1 = self.group.mul(u, v);
                let p1 = self.side.mul(iu, iv);
                if !self.define(w1, p1) {
                    return false;
                }
                let w2 = self.group.mul(v, u);
                let p2 = self.side.mul(iv, iu);
                if !self.define(w2, p2) {
                    return false;
                }
                j += 1;
            }
            cursor += 1;
        }
        true
    }
}

/// The full automorphism group, each element as an image vector, sorted.
pub fn enumerate_automorphisms(group: &Group) -> Result<Vec<Vec<usize>>> {
    if group.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::capability(format!(
            "automorphism enumeration is bounded to order {MAX_ENUMERATION_ORDER}, got {}",
            group.order()
        )));
    }
    let gens = minimal_generating_set(group);
    let orders: Vec<usize> = group.elements().map(|g| group.element_order(g)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            group
                .elements()
                .filter(|&y| orders[y] == orders[g])
                .collect()
        })
        .collect();

    fn dfs(
        ext: &mut Extender,
        gens: &[usize],
        candidates: &[Vec<usize>],
        level: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if level == gens.len() {
            debug_assert_eq!(ext.defined.len(), ext.group.order());
            out.push(ext.image.clone());
            return;
        }
        for &y in &candidates[level] {
            let snap = ext.snapshot();
            if ext.assign(gens[level], y) {
                dfs(ext, gens, candidates, level + 1, out);
            }
            ext.rollback(snap);
        }
    }

    let mut out = Vec::new();
    let mut ext = Extender::new(group, ImageSide::Straight(group), true);
    dfs(&mut ext, &gens, &candidates, 0, &mut out);
    out.sort();
    Ok(out)
}

/// The complete list of order <= 2 anti-automorphisms, obtained as
/// {inversion . alpha : alpha in Aut(G)} filtered by involutivity.
pub fn enumerate_antiautomorphisms(group: &Group) -> Result<Vec<AntiAutomorphism>> {
    let autos = enumerate_automorphisms(group)?;
    let mut out = Vec::new();
    for alpha in autos {
        let map: Vec<usize> = alpha.iter().map(|&y| group.inverse(y)).collect();
        if group.elements().all(|g| map[map[g]] == g) {
            out.push(map);
        }
    }
    out.sort();
    Ok(out
        .into_iter()
        .map(|map| {
            AntiAutomorphism::new(group, map).expect("enumerated map is a valid anti-automorphism")
        })
        .collect())
}

/// Complete list of homomorphisms G -> U(K), sorted by value vector.
pub fn enumerate_unit_homomorphisms(
    group: &Group,
    ring: &CoeffRing,
) -> Result<Vec<UnitHomomorphism>> {
    if group.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::capability(format!(
            "homomorphism enumeration is bounded to order {MAX_ENUMERATION_ORDER}, got {}",
            group.order()
        )));
    }
    let gens = minimal_generating_set(group);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = group.element_order(g);
            ring.units()
                .iter()
                .copied()
                .filter(|&u| o.is_multiple_of(ring.unit_order(u)))
                .collect()
        })
        .collect();

    fn dfs(
        ext: &mut Extender,
        gens: &[usize],
        candidates: &[Vec<usize>],
        level: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if level == gens.len() {
            debug_assert_eq!(ext.defined.len(), ext.group.order());
            out.push(ext.image.clone());
            return;
        }
        for &u in &candidates[level] {
            let snap = ext.snapshot();
            if ext.assign(gens[level], u) {
                dfs(ext, gens, candidates, level + 1, out);
            }
            ext.rollback(snap);
        }
    }

    let mut out = Vec::new();
    let mut ext = Extender::new(group, ImageSide::Ring(ring), false);
    dfs(&mut ext, &gens, &candidates, 0, &mut out);
    out.sort();
    Ok(out
        .into_iter()
        .map(|values| {
            UnitHomomorphism::new(group, ring, values).expect("enumerated map is a homomorphism")
        })
        .collect())
}

/// Extends `generator -> image` assignments anti-multiplicatively to the
/// whole group; `None` when the assignments are inconsistent or fail to
/// generate.
pub fn extend_antiautomorphism(
    group: &Group,
    assignments: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let mut ext = Extender::new(group, ImageSide::Reversed(group), true);
    for &(g, y) in assignments {
        if !ext.assign(g, y) {
            return None;
        }
    }
    if ext.defined.len() != group.order() {
        return None;
    }
    Some(ext.image)
}

/// The conjugation-shaped anti-automorphism fixing everything outside an
/// abelian index-2 subgroup `h` and acting as conjugation by `b` on it.
pub fn conjugation_spec(group: &Group, h: &ElementSubset, b: usize) -> Result<AntiAutomorphism> {
    if b >= group.order() || h.contains(b) {
        return Err(Error::input("conjugating element must lie outside the subgroup"));
    }
    let map: Vec<usize> = group
        .elements()
        .map(|g| {
            if h.contains(g) {
                group.conjugate(g, b)
            } else {
                g
            }
        })
        .collect();
    AntiAutomorphism::new(group, map)
}

/// Sign-style homomorphism: 1 on the subgroup, -1 outside. Valid exactly
/// when the subgroup has index 2 (or characteristic is 2).
pub fn sign_homomorphism(
    group: &Group,
    ring: &CoeffRing,
    kernel: &ElementSubset,
) -> Result<UnitHomomorphism> {
    let values: Vec<usize> = group
        .elements()
        .map(|g| {
            if kernel.contains(g) {
                ring.one()
            } else {
                ring.neg_one()
            }
        })
        .collect();
    UnitHomomorphism::new(group, ring, values)
}

// --- text formats -----------------------------------------------------

/// Parses one line of `n` 0-based indices as a sigma map.
pub fn parse_sigma_line(group: &Group, line: &str) -> Result<AntiAutomorphism> {
    let map: Vec<usize> = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::input(format!("bad sigma index {tok:?}")))
        })
        .collect::<Result<_>>()?;
    AntiAutomorphism::new(group, map)
}

/// Parses one line of `n` ring-element literals as an f map.
pub fn parse_f_line(group: &Group, ring: &CoeffRing, line: &str) -> Result<UnitHomomorphism> {
    let values: Vec<usize> = line
        .split_whitespace()
        .map(|tok| ring.parse_element(tok))
        .collect::<Result<_>>()?;
    UnitHomomorphism::new(group, ring, values)
}

/// Parses the two-line involution spec format: a line of sigma indices,
/// then a line of f literals.
pub fn parse_spec_text(group: &Group, ring: &CoeffRing, text: &str) -> Result<InvolutionSpec> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let sigma_line = lines
        .next()
        .ok_or_else(|| Error::input("spec text is empty"))?;
    let f_line = lines
        .next()
        .ok_or_else(|| Error::input("spec text is missing the f line"))?;
    if lines.next().is_some() {
        return Err(Error::input("trailing content after involution spec"));
    }
    let sigma = parse_sigma_line(group, sigma_line)?;
    let f = parse_f_line(group, ring, f_line)?;
    InvolutionSpec::new(group, ring, sigma, f)
}

pub fn format_spec_text(spec: &InvolutionSpec) -> String {
    let sigma: Vec<String> = spec.sigma().map().iter().map(usize::to_string).collect();
    let f: Vec<String> = spec.f().values().iter().map(usize::to_string).collect();
    format!("{}\n{}\n", sigma.join(" "), f.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, elementary_abelian, quaternion};
    use crate::ring::make_ring;
    use crate::subgroup::derived_subgroup;

    /// Brute-force count of involutive anti-automorphisms over all
    /// bijections fixing the identity.
    fn naive_antiauto_count(group: &Group) -> usize {
        let n = group.order();
        assert!(n <= 8);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        // Heap's algorithm over indices 1..n.
        fn visit(group: &Group, perm: &mut Vec<usize>, k: usize, count: &mut usize) {
            let n = perm.len();
            if k == n {
                let anti = (0..n).all(|g| {
                    (0..n).all(|h| perm[group.mul(g, h)] == group.mul(perm[h], perm[g]))
                });
                if anti && (0..n).all(|g| perm[perm[g]] == g) {
                    *count += 1;
                }
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                visit(group, perm, k + 1, count);
                perm.swap(k, i);
            }
        }
        visit(group, &mut perm, 1, &mut count);
        count
    }

    #[test]
    fn classical_is_involutive_inversion() {
        let c6 = cyclic(6).unwrap();
        let sigma = AntiAutomorphism::classical(&c6);
        for g in c6.elements() {
            assert_eq!(sigma.apply(g), c6.inverse(g));
            assert_eq!(sigma.apply(sigma.apply(g)), g);
        }
        AntiAutomorphism::new(&c6, sigma.map().to_vec()).unwrap();
    }

    #[test]
    fn classical_on_q8_fixes_center() {
        let q8 = quaternion(8).unwrap();
        let sigma = AntiAutomorphism::classical(&q8);
        assert_eq!(sigma.fixed_set().members(), &[0, 2]);
    }

    #[test]
    fn enumerate_tiny_groups() {
        let c2 = cyclic(2).unwrap();
        let list = enumerate_antiautomorphisms(&c2).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].map(), &[0, 1]);

        let c4 = cyclic(4).unwrap();
        let list = enumerate_antiautomorphisms(&c4).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list[0].map(), &[0, 1, 2, 3]);
        assert_eq!(list[1].map(), &[0, 3, 2, 1]);
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        for group in [
            dihedral(4).unwrap(),
            quaternion(8).unwrap(),
            cyclic(8).unwrap(),
            elementary_abelian(2, 3).unwrap(),
            dihedral(3).unwrap(),
        ] {
            let fast = enumerate_antiautomorphisms(&group).unwrap().len();
            let naive = naive_antiauto_count(&group);
            assert_eq!(fast, naive, "{}", group.name());
        }
    }

    #[test]
    fn enumerated_antiautomorphisms_revalidate() {
        let d4 = dihedral(4).unwrap();
        for sigma in enumerate_antiautomorphisms(&d4).unwrap() {
            AntiAutomorphism::new(&d4, sigma.map().to_vec()).unwrap();
        }
    }

    #[test]
    fn unit_homomorphism_counts() {
        let c2 = cyclic(2).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let homs = enumerate_unit_homomorphisms(&c2, &z3).unwrap();
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[0].values(), &[1, 1]);
        assert_eq!(homs[1].values(), &[1, 2]);

        let s3 = dihedral(3).unwrap();
        let f4 = make_ring("F4").unwrap();
        let homs = enumerate_unit_homomorphisms(&s3, &f4).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].is_trivial(&f4));
    }

    #[test]
    fn trivial_hom_always_listed() {
        for label in ["Z2", "Z5", "F9"] {
            let ring = make_ring(label).unwrap();
            for group in [cyclic(6).unwrap(), quaternion(8).unwrap()] {
                let homs = enumerate_unit_homomorphisms(&group, &ring).unwrap();
                assert!(homs
                    .iter()
                    .any(|f| f.values() == UnitHomomorphism::trivial(&group, &ring).values()));
            }
        }
    }

    #[test]
    fn homomorphisms_constant_on_derived_cosets() {
        let d4 = dihedral(4).unwrap();
        let z5 = make_ring("Z5").unwrap();
        let derived = derived_subgroup(&d4);
        for f in enumerate_unit_homomorphisms(&d4, &z5).unwrap() {
            for g in d4.elements() {
                for d in derived.iter() {
                    assert_eq!(f.value(g), f.value(d4.mul(g, d)));
                }
            }
        }
    }

    #[test]
    fn classical_compatible_with_every_f() {
        let d4 = dihedral(4).unwrap();
        let z5 = make_ring("Z5").unwrap();
        let sigma = AntiAutomorphism::classical(&d4);
        for f in enumerate_unit_homomorphisms(&d4, &z5).unwrap() {
            assert_eq!(compatibility_witness(&d4, &z5, &sigma, &f), None);
        }
    }

    #[test]
    fn s3_conjugation_spec_is_compatible() {
        let s3 = dihedral(3).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let rotations = ElementSubset::new(vec![0, 1, 2]);
        let sigma = conjugation_spec(&s3, &rotations, 3).unwrap();
        assert_eq!(sigma.map(), &[0, 2, 1, 3, 4, 5]);
        let f = sign_homomorphism(&s3, &z3, &rotations).unwrap();
        assert_eq!(f.values(), &[1, 1, 1, 2, 2, 2]);
        assert_eq!(compatibility_witness(&s3, &z3, &sigma, &f), None);
        InvolutionSpec::new(&s3, &z3, sigma, f).unwrap();
    }

    #[test]
    fn incompatible_pair_reports_first_witness() {
        // C4 with sigma = identity, f(g) = 2 over Z5: f(g sigma(g)) = f(g^2) = 4.
        let c4 = cyclic(4).unwrap();
        let z5 = make_ring("Z5").unwrap();
        let sigma = AntiAutomorphism::new(&c4, vec![0, 1, 2, 3]).unwrap();
        let f = UnitHomomorphism::new(&c4, &z5, vec![1, 2, 4, 3]).unwrap();
        assert_eq!(compatibility_witness(&c4, &z5, &sigma, &f), Some(1));
        assert!(InvolutionSpec::new(&c4, &z5, sigma, f).is_err());
    }

    #[test]
    fn minimal_generating_sets() {
        assert!(minimal_generating_set(&cyclic(1).unwrap()).is_empty());
        assert_eq!(minimal_generating_set(&cyclic(6).unwrap()), vec![1]);
        assert_eq!(minimal_generating_set(&dihedral(4).unwrap()).len(), 2);
        assert_eq!(minimal_generating_set(&elementary_abelian(2, 3).unwrap()).len(), 3);
    }

    #[test]
    fn anti_extension_from_generators() {
        let q8 = quaternion(8).unwrap();
        // x -> x^-1, y -> y^-1 extends to the classical involution.
        let map = extend_antiautomorphism(&q8, &[(1, 3), (4, 6)]).unwrap();
        assert_eq!(map, AntiAutomorphism::classical(&q8).map());
        // x -> x^2 collapses x^2 onto the identity's image: inconsistent.
        assert!(extend_antiautomorphism(&q8, &[(1, 2)]).is_none());
        // Fixing both generators extends to the word-reversal map.
        let rev = extend_antiautomorphism(&q8, &[(1, 1), (4, 4)]).unwrap();
        AntiAutomorphism::new(&q8, rev).unwrap();
    }

    #[test]
    fn spec_text_round_trip() {
        let s3 = dihedral(3).unwrap();
        let z3 = make_ring("Z3").unwrap();
        let text = "0 2 1 3 4 5\n1 1 1 2 2 2\n";
        let spec = parse_spec_text(&s3, &z3, text).unwrap();
        assert_eq!(format_spec_text(&spec), text);
        // Bad sigma line: not a permutation.
        assert!(parse_spec_text(&s3, &z3, "0 0 1 3 4 5\n1 1 1 2 2 2\n").is_err());
        // Bad f line: not a unit.
        assert!(parse_spec_text(&s3, &z3, "0 2 1 3 4 5\n1 1 1 0 0 0\n").is_err());
    }
}
