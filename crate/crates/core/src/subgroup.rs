//! Structural subgroup computations: center, centralizers, derived
//! subgroup, lower central series, Frattini subgroup, subgroup lattice,
//! normality, exponent and elementary-abelian recognition.
//!
//! Everything here is a finite scan over the parent group's Cayley table.
//! The lattice enumeration (and hence the Frattini subgroup) is bounded to
//! order 32.

use crate::error::{Error, Result};
use crate::group::{ElementSubset, Group};

/// Lattice enumeration bound for `subgroup_lattice` / `frattini_subgroup`.
pub const MAX_LATTICE_ORDER: usize = 32;

pub fn center(g: &Group) -> ElementSubset {
    ElementSubset::new(
        g.elements()
            .filter(|&x| g.elements().all(|y| g.commute(x, y)))
            .collect(),
    )
}

pub fn centralizer(g: &Group, s: &ElementSubset) -> Result<ElementSubset> {
    if s.members().iter().any(|&x| x >= g.order()) {
        return Err(Error::input("centralizer: subset outside the group"));
    }
    Ok(ElementSubset::new(
        g.elements()
            .filter(|&x| s.iter().all(|y| g.commute(x, y)))
            .collect(),
    ))
}

pub fn generated_subgroup(g: &Group, gens: &[usize]) -> Result<ElementSubset> {
    if gens.iter().any(|&x| x >= g.order()) {
        return Err(Error::input("generated_subgroup: generator outside the group"));
    }
    Ok(ElementSubset::new(g.closure(gens)))
}

pub fn derived_subgroup(g: &Group) -> ElementSubset {
    let mut comms = Vec::new();
    for x in g.elements() {
        for y in g.elements() {
            comms.push(g.commutator(x, y));
        }
    }
    ElementSubset::new(g.closure(&comms))
}

/// Lower central series `[gamma_1, gamma_2, ...]` computed until it
/// stabilizes. `gamma_1 = G`, `gamma_{i+1} = (gamma_i, G)`.
pub fn lower_central_series(g: &Group) -> Vec<ElementSubset> {
    let mut series = vec![ElementSubset::new(g.elements().collect())];
    loop {
        let last = series.last().unwrap();
        let mut comms = Vec::new();
        for x in last.iter() {
            for y in g.elements() {
                comms.push(g.commutator(x, y));
            }
        }
        let next = ElementSubset::new(g.closure(&comms));
        if &next == last {
            break;
        }
        series.push(next);
    }
    series
}

/// Nilpotency class, or `None` when the series stabilizes above the
/// trivial subgroup.
pub fn nilpotency_class(g: &Group) -> Option<usize> {
    let series = lower_central_series(g);
    if series.last().unwrap().len() == 1 {
        Some(series.len() - 1)
    } else {
        None
    }
}

/// All subgroups of the parent, with maximality flags.
pub struct SubgroupLattice {
    pub subgroups: Vec<ElementSubset>,
    pub maximal: Vec<bool>,
}

/// Enumerates every subgroup by breadth-first closure: seed with all
/// cyclic subgroups, then repeatedly adjoin single generators.
pub fn subgroup_lattice(g: &Group) -> Result<SubgroupLattice> {
    if g.order() > MAX_LATTICE_ORDER {
        return Err(Error::capability(format!(
            "subgroup lattice enumeration is bounded to order {MAX_LATTICE_ORDER}, got {}",
            g.order()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut queue: Vec<ElementSubset> = Vec::new();
    let trivial = ElementSubset::new(vec![g.identity()]);
    seen.insert(trivial.members().to_vec());
    queue.push(trivial);
    for x in g.elements() {
        let cyc = ElementSubset::new(g.closure(&[x]));
        if seen.insert(cyc.members().to_vec()) {
            queue.push(cyc);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        let current = queue[i].clone();
        if current.len() < g.order() {
            for x in g.elements() {
                if current.contains(x) {
                    continue;
                }
                let mut gens = current.members().to_vec();
                gens.push(x);
                let bigger = ElementSubset::new(g.closure(&gens));
                if seen.insert(bigger.members().to_vec()) {
                    queue.push(bigger);
                }
            }
        }
        i += 1;
    }
    queue.sort();
    let maximal: Vec<bool> = queue
        .iter()
        .map(|h| {
            h.len() < g.order()
                && !queue.iter().any(|k| {
                    k.len() < g.order() && k.len() > h.len() && h.is_subset_of(k)
                })
        })
        .collect();
    Ok(SubgroupLattice {
        subgroups: queue,
        maximal,
    })
}

/// Intersection of all maximal subgroups (the whole group if none exist).
pub fn frattini_subgroup(g: &Group) -> Result<ElementSubset> {
    let lattice = subgroup_lattice(g)?;
    let mut in_all = vec![true; g.order()];
    let mut any = false;
    for (h, &is_max) in lattice.subgroups.iter().zip(&lattice.maximal) {
        if !is_max {
            continue;
        }
        any = true;
        for x in g.elements() {
            if !h.contains(x) {
                in_all[x] = false;
            }
        }
    }
    if !any {
        return Ok(ElementSubset::new(g.elements().collect()));
    }
    Ok(ElementSubset::new(
        g.elements().filter(|&x| in_all[x]).collect(),
    ))
}

pub fn is_normal(g: &Group, s: &ElementSubset) -> Result<bool> {
    if !g.is_subgroup(s) {
        return Err(Error::input("is_normal: subset is not a subgroup"));
    }
    Ok(g
        .elements()
        .all(|x| s.iter().all(|h| s.contains(g.conjugate(h, x)))))
}

/// Least common multiple of all element orders.
pub fn exponent(g: &Group) -> usize {
    g.elements().fold(1usize, |acc, x| {
        let o = g.element_order(x);
        acc / gcd(acc, o) * o
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `Some(rank)` when the group is abelian of exponent dividing 2,
/// in which case its order is `2^rank`.
pub fn elementary_abelian_2_rank(g: &Group) -> Option<u32> {
    if !g.is_abelian() || exponent(g) > 2 {
        return None;
    }
    let rank = g.order().trailing_zeros();
    debug_assert_eq!(1usize << rank, g.order());
    Some(rank)
}

/// All subgroups of index exactly 2: preimages of the hyperplanes of the
/// elementary abelian quotient `G / <squares, commutators>`.
pub fn index_two_subgroups(g: &Group) -> Vec<ElementSubset> {
    let mut seed: Vec<usize> = g.elements().map(|x| g.mul(x, x)).collect();
    for x in g.elements() {
        for y in g.elements() {
            seed.push(g.commutator(x, y));
        }
    }
    let base = ElementSubset::new(g.closure(&seed));
    if base.len() == g.order() {
        return Vec::new();
    }
    let q = crate::group::quotient(g, &base).expect("squares-commutators subgroup is normal");
    let v = &q.group; // elementary abelian 2-group
    debug_assert_eq!(exponent(v), 2);
    // Hyperplanes = kernels of nonzero linear functionals on V over F2.
    let dim = v.order().trailing_zeros();
    let mut basis = Vec::new();
    let mut span = ElementSubset::new(vec![0]);
    for x in v.elements() {
        if !span.contains(x) {
            basis.push(x);
            let mut gens = span.members().to_vec();
            gens.push(x);
            span = ElementSubset::new(v.closure(&gens));
        }
    }
    debug_assert_eq!(basis.len() as u32, dim);
    let coords = |x: usize| -> usize {
        // Express x in the chosen basis by greedy elimination.
        let mut rem = x;
        let mut mask = 0usize;
        for i in (0..basis.len()).rev() {
            let sub = ElementSubset::new(v.closure(&basis[..i]));
            if !sub.contains(rem) {
                mask |= 1 << i;
                rem = v.mul(rem, v.inverse(basis[i]));
            }
        }
        debug_assert_eq!(rem, 0);
        mask
    };
    let masks: Vec<usize> = v.elements().map(coords).collect();
    let mut out = Vec::new();
    for functional in 1..(1usize << dim) {
        let members: Vec<usize> = g
            .elements()
            .filter(|&x| (masks[q.projection[x]] & functional).count_ones().is_multiple_of(2))
            .collect();
        out.push(ElementSubset::new(members));
    }
    out.sort();
    out.dedup();
    out
}
