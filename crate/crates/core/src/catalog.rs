//! The named group catalog driving sweeps, plus the builtin sigma / f
//! specs for its entries.
//!
//! Cyclic, dihedral, quaternion and elementary abelian families, a few
//! direct products with C2 / C3, and the three central products that
//! exercise the product-decomposition cases. Elementary abelian entries
//! stop at order 16: rank 5 would put ~10M automorphisms in front of
//! every sweep for groups whose group rings are commutative anyway.

use crate::error::{Error, Result};
use crate::group::{
    central_product, cyclic, dihedral, direct_product, elementary_abelian, quaternion,
    ElementSubset, Group,
};
use crate::morphism::{
    conjugation_spec, extend_antiautomorphism, sign_homomorphism, AntiAutomorphism,
    UnitHomomorphism,
};
use crate::ring::CoeffRing;
use crate::subgroup::index_two_subgroups;

/// Generator data kept for central-product entries so the twist builtin
/// can be constructed.
#[derive(Clone, Debug)]
pub struct TwistSeed {
    /// Generators whose sigma-image is the generator times `commutator`.
    pub twisted: Vec<usize>,
    /// Generators fixed by sigma.
    pub fixed: Vec<usize>,
    pub commutator: usize,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub group: Group,
    pub twist_seed: Option<TwistSeed>,
}

impl CatalogEntry {
    fn plain(group: Group) -> CatalogEntry {
        CatalogEntry {
            label: group.name().to_string(),
            group,
            twist_seed: None,
        }
    }
}

pub fn d4_y_c4() -> CatalogEntry {
    let d4 = dihedral(4).unwrap();
    let c4 = cyclic(4).unwrap();
    let z = ElementSubset::new(vec![0, 2]);
    let cp = central_product(&d4, &c4, &z, &z, &[(0, 0), (2, 2)]).unwrap();
    let seed = TwistSeed {
        twisted: vec![cp.embed_a[1], cp.embed_a[4]],
        fixed: vec![cp.embed_b[1]],
        commutator: cp.embed_a[2],
    };
    CatalogEntry {
        label: "D4YC4".into(),
        group: cp.group,
        twist_seed: Some(seed),
    }
}

pub fn d4_y_d4() -> CatalogEntry {
    let d4 = dihedral(4).unwrap();
    let z = ElementSubset::new(vec![0, 2]);
    let cp = central_product(&d4, &d4, &z, &z, &[(0, 0), (2, 2)]).unwrap();
    let seed = TwistSeed {
        twisted: vec![cp.embed_a[1], cp.embed_a[4], cp.embed_b[1], cp.embed_b[4]],
        fixed: vec![],
        commutator: cp.embed_a[2],
    };
    CatalogEntry {
        label: "D4YD4".into(),
        group: cp.group,
        twist_seed: Some(seed),
    }
}

pub fn q8_y_q8() -> CatalogEntry {
    let q8 = quaternion(8).unwrap();
    let z = ElementSubset::new(vec![0, 2]);
    let cp = central_product(&q8, &q8, &z, &z, &[(0, 0), (2, 2)]).unwrap();
    let seed = TwistSeed {
        twisted: vec![cp.embed_a[1], cp.embed_a[4], cp.embed_b[1], cp.embed_b[4]],
        fixed: vec![],
        commutator: cp.embed_a[2],
    };
    CatalogEntry {
        label: "Q8YQ8".into(),
        group: cp.group,
        twist_seed: Some(seed),
    }
}

/// The full fixed catalog, filtered to `order <= max_order`.
pub fn catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    for n in 1..=16 {
        entries.push(CatalogEntry::plain(cyclic(n).unwrap()));
    }
    for n in 3..=8 {
        entries.push(CatalogEntry::plain(dihedral(n).unwrap()));
    }
    entries.push(CatalogEntry::plain(quaternion(8).unwrap()));
    entries.push(CatalogEntry::plain(quaternion(16).unwrap()));
    for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
        entries.push(CatalogEntry::plain(elementary_abelian(p, k).unwrap()));
    }
    let c2 = cyclic(2).unwrap();
    let c3 = cyclic(3).unwrap();
    for base in [cyclic(4).unwrap(), cyclic(6).unwrap(), cyclic(8).unwrap()] {
        entries.push(CatalogEntry::plain(direct_product(&base, &c2).unwrap()));
    }
    let d4 = dihedral(4).unwrap();
    let q8 = quaternion(8).unwrap();
    let d3 = dihedral(3).unwrap();
    entries.push(CatalogEntry::plain(direct_product(&d4, &c2).unwrap()));
    entries.push(CatalogEntry::plain(direct_product(&q8, &c2).unwrap()));
    entries.push(CatalogEntry::plain(direct_product(&d4, &c3).unwrap()));
    entries.push(CatalogEntry::plain(direct_product(&q8, &c3).unwrap()));
    entries.push(CatalogEntry::plain(direct_product(&d3, &c3).unwrap()));
    entries.push(d4_y_c4());
    entries.push(d4_y_d4());
    entries.push(q8_y_q8());
    entries.retain(|e| e.group.order() <= max_order);
    entries
}

/// Resolves a builtin sigma by name: `classical`, `theorem-i` (the
/// conjugation map off the first abelian index-2 subgroup), or
/// `case-iii` (the central-commutator twist, central-product entries
/// only).
pub fn builtin_sigma(entry: &CatalogEntry, name: &str) -> Result<AntiAutomorphism> {
    let group = &entry.group;
    match name {
        "classical" => Ok(AntiAutomorphism::classical(group)),
        "theorem-i" => {
            for h in index_two_subgroups(group) {
                let abelian = h.iter().all(|g| h.iter().all(|x| group.commute(g, x)));
                if !abelian {
                    continue;
                }
                for b in group.elements() {
                    if h.contains(b) {
                        continue;
                    }
                    if let Ok(sigma) = conjugation_spec(group, &h, b) {
                        return Ok(sigma);
                    }
                }
            }
            Err(Error::input(format!(
                "builtin theorem-i is unavailable for {}: no abelian index-2 subgroup admits it",
                entry.label
            )))
        }
        "case-iii" => {
            let seed = entry.twist_seed.as_ref().ok_or_else(|| {
                Error::input(format!(
                    "builtin case-iii is only defined for central-product catalog entries, not {}",
                    entry.label
                ))
            })?;
            let mut assignments: Vec<(usize, usize)> = seed
                .twisted
                .iter()
                .map(|&g| (g, group.mul(g, seed.commutator)))
                .collect();
            assignments.extend(seed.fixed.iter().map(|&g| (g, g)));
            let map = extend_antiautomorphism(group, &assignments).ok_or_else(|| {
                Error::input("case-iii seed does not extend to an anti-automorphism")
            })?;
            AntiAutomorphism::new(group, map)
        }
        _ => Err(Error::input(format!("unknown builtin sigma {name:?}"))),
    }
}

/// Resolves a builtin f by name: `trivial` or `sign` (the character with
/// the first index-2 subgroup as kernel).
pub fn builtin_f(entry: &CatalogEntry, ring: &CoeffRing, name: &str) -> Result<UnitHomomorphism> {
    let group = &entry.group;
    match name {
        "trivial" => Ok(UnitHomomorphism::trivial(group, ring)),
        "sign" => {
            let subs = index_two_subgroups(group);
            let kernel = subs.first().ok_or_else(|| {
                Error::input(format!(
                    "builtin sign is unavailable for {}: no index-2 subgroup",
                    entry.label
                ))
            })?;
            sign_homomorphism(group, ring, kernel)
        }
        _ => Err(Error::input(format!("unknown builtin f {name:?}"))),
    }
}
