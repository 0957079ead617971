//! Structural classification of sigma-normal group rings: the
//! two-generator case analysis, sigma-group detection with its subgroup
//! equalities, and the full decision procedure that emits a certificate
//! naming the structural case or rejecting.
//!
//! The certificate's `case != NotNormal` verdict is required to coincide
//! with the pairwise checker's verdict on every input; that equivalence is
//! the load-bearing acceptance property of the whole workbench.
//!
//! A note on quotients: the fixed set R = {g : sigma(g) = g} of a valid
//! instance need not be closed under multiplication (products of two fixed
//! elements can be moved), so "G/R" is implemented as the quotient by the
//! central fixed subgroup R n Z(G), which is what the structural cases'
//! coset generators and rank counts actually describe.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{quotient, ElementSubset, Group};
use crate::morphism::{AntiAutomorphism, InvolutionSpec};
use crate::ring::CoeffRing;
use crate::subgroup::{center, centralizer, derived_subgroup, frattini_subgroup, nilpotency_class};

pub const MAX_CLASSIFY_ORDER: usize = 32;

/// Outcome tag of the structural classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremCase {
    Commutative,
    CaseI,
    CaseIiA,
    CaseIiB,
    CaseIiiA,
    CaseIiiB,
    NotNormal,
}

impl TheoremCase {
    pub fn is_normal(self) -> bool {
        self != TheoremCase::NotNormal
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremCase::Commutative => "commutative",
            TheoremCase::CaseI => "case_i",
            TheoremCase::CaseIiA => "case_ii_a",
            TheoremCase::CaseIiB => "case_ii_b",
            TheoremCase::CaseIiiA => "case_iii_a",
            TheoremCase::CaseIiiB => "case_iii_b",
            TheoremCase::NotNormal => "not_normal",
        }
    }
}

/// A two-generator subgroup on which sigma acts by the central commutator
/// twist: <a,b> non-abelian nilpotent of class 2, derived subgroup {e, c}
/// of order 2, sigma(a) = a c, sigma(b) = b c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaGroupWitness {
    pub a: usize,
    pub b: usize,
    pub commutator: usize,
    pub subgroup: ElementSubset,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CaseWitnesses {
    None,
    CaseI {
        subgroup: ElementSubset,
        b: usize,
    },
    CaseIi {
        pair: SigmaGroupWitness,
        centralizer: ElementSubset,
        d: Option<usize>,
    },
    CaseIii {
        pairs: Vec<SigmaGroupWitness>,
        centralizer: ElementSubset,
        d: Option<usize>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationCertificate {
    pub case: TheoremCase,
    pub fixed_set: ElementSubset,
    pub moved_set: ElementSubset,
    pub witnesses: CaseWitnesses,
}

/// Fixed set, moved set, and the subgroup generated by the moved set.
pub struct FixedMovedSets {
    pub fixed: ElementSubset,
    pub moved: ElementSubset,
    pub moved_closure: ElementSubset,
}

pub fn fixed_and_moved_sets(group: &Group, sigma: &AntiAutomorphism) -> FixedMovedSets {
    let fixed = sigma.fixed_set();
    let moved = fixed.complement(group.order());
    let moved_closure = ElementSubset::new(group.closure(moved.members()));
    FixedMovedSets {
        fixed,
        moved,
        moved_closure,
    }
}

/// The two-generator case tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma2Case {
    I,
    Ii,
    Iii,
    Iv,
    Violation,
}

/// Checks which of the four two-generator condition bundles holds for a
/// non-commuting pair, exactly as listed; `Violation` when none does.
pub fn lemma2_case(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
    a: usize,
    b: usize,
) -> Result<Lemma2Case> {
    if a >= group.order() || b >= group.order() {
        return Err(Error::input("lemma2_case: element index out of range"));
    }
    let c = group.commutator(a, b);
    if c == group.identity() {
        return Err(Error::input("lemma2_case requires a non-commuting pair"));
    }
    let sigma = spec.sigma();
    let f = spec.f();
    let one = ring.one();
    let neg_one = ring.neg_one();
    let e = group.identity();

    let ab = group.mul(a, b);
    let ba = group.mul(b, a);
    let ab2 = group.mul(ab, ab);
    let ba2 = group.mul(ba, ba);
    let a2 = group.mul(a, a);
    let b2 = group.mul(b, b);
    let c_inv_sq = group.inverse(group.mul(c, c));

    // (i): f(a)=1, f(b)=-1, sigma(a)=(a,b)a, sigma(b)=b, (b^2,a)=1,
    //      (ab)^2=(ba)^2, ((a,b),a)=1, ((a,b),b)=(a,b)^-2.
    if f.value(a) == one
        && f.value(b) == neg_one
        && sigma.apply(a) == group.mul(c, a)
        && sigma.apply(b) == b
        && group.commutator(b2, a) == e
        && ab2 == ba2
        && group.commutator(c, a) == e
        && group.commutator(c, b) == c_inv_sq
    {
        return Ok(Lemma2Case::I);
    }
    // (ii): mirror of (i).
    if f.value(a) == neg_one
        && f.value(b) == one
        && sigma.apply(a) == a
        && sigma.apply(b) == group.mul(c, b)
        && group.commutator(b, a2) == e
        && ab2 == ba2
        && group.commutator(c, b) == e
        && group.commutator(c, a) == c_inv_sq
    {
        return Ok(Lemma2Case::Ii);
    }
    // (iii): f(a)=f(b)=-1, sigma fixes both, (a^2,b)=(a,b^2)=1,
    //        ((a,b),ab)=1. (No (ab)^2=(ba)^2 here: that relation belongs
    //        to the mixed cases and fails on valid doubly-fixed pairs,
    //        e.g. two reflections of the dihedral conjugation instance.)
    if f.value(a) == neg_one
        && f.value(b) == neg_one
        && sigma.apply(a) == a
        && sigma.apply(b) == b
        && group.commutator(a2, b) == e
        && group.commutator(a, b2) == e
        && group.commutator(c, ab) == e
    {
        return Ok(Lemma2Case::Iii);
    }
    // (iv): f(a)=f(b)=1, sigma(a)=(a,b)a, sigma(b)=(a,b)b, <a,b> nilpotent
    //       of class 2 with derived subgroup of order 2.
    if f.value(a) == one && f.value(b) == one {
        let twist_a = sigma.apply(a) == group.mul(c, a);
        let twist_b = sigma.apply(b) == group.mul(c, b);
        if twist_a && twist_b {
            let gamma = ElementSubset::new(group.closure(&[a, b]));
            let (sub, _) = group.subgroup_group(&gamma)?;
            if nilpotency_class(&sub) == Some(2) && derived_subgroup(&sub).len() == 2 {
                return Ok(Lemma2Case::Iv);
            }
        }
    }
    Ok(Lemma2Case::Violation)
}

/// Detects the sigma-group structure on <a,b>, additionally verifying the
/// Frattini = center = fixed-set equality and the two-valued action of
/// sigma on the subgroup. Absence is a normal outcome.
pub fn detect_sigma_group(
    group: &Group,
    sigma: &AntiAutomorphism,
    a: usize,
    b: usize,
) -> Option<SigmaGroupWitness> {
    let e = group.identity();
    let c = group.commutator(a, b);
    if c == e {
        return None;
    }
    if sigma.apply(a) != group.mul(a, c) || sigma.apply(b) != group.mul(b, c) {
        return None;
    }
    let gamma = ElementSubset::new(group.closure(&[a, b]));
    // sigma must restrict to the subgroup.
    if gamma.iter().any(|g| !gamma.contains(sigma.apply(g))) {
        return None;
    }
    let (sub, members) = group.subgroup_group(&gamma).ok()?;
    if nilpotency_class(&sub) != Some(2) {
        return None;
    }
    let derived = derived_subgroup(&sub);
    if derived.len() != 2 || members[derived.members()[1]] != c {
        return None;
    }
    // Frattini = center = fixed set, inside <a,b>.
    let phi = frattini_subgroup(&sub).ok()?;
    let zeta = center(&sub);
    let fix = ElementSubset::new(
        (0..sub.order())
            .filter(|&i| sigma.apply(members[i]) == members[i])
            .collect(),
    );
    if phi != zeta || zeta != fix {
        return None;
    }
    // Action: identity on the center, multiplication by c off it.
    for (i, &g) in members.iter().enumerate() {
        let expect = if zeta.contains(i) { g } else { group.mul(g, c) };
        if sigma.apply(g) != expect {
            return None;
        }
    }
    Some(SigmaGroupWitness {
        a,
        b,
        commutator: c,
        subgroup: gamma,
    })
}

/// Quotient frame for the structural cases: V = G / (fixed n center) as an
/// F2 vector space carrying the commutator form B and the sigma-twist
/// marker eps.
struct TwistFrame {
    vgroup: Group,
    reps: Vec<usize>,
    eps: Vec<u8>,
    bmat: Vec<bool>,
    dim: u32,
    rad_dim: u32,
    z0: ElementSubset,
}

impl TwistFrame {
    fn b(&self, u: usize, v: usize) -> bool {
        self.bmat[u * self.vgroup.order() + v]
    }
}

fn build_frame(
    group: &Group,
    sigma: &AntiAutomorphism,
    c: usize,
    fixed: &ElementSubset,
    zeta: &ElementSubset,
) -> Option<TwistFrame> {
    // Two-valued action everywhere.
    for g in group.elements() {
        let s = sigma.apply(g);
        if s != g && s != group.mul(g, c) {
            return None;
        }
    }
    let z0 = fixed.intersect(zeta);
    if !group.is_subgroup(&z0) {
        return None;
    }
    let q = quotient(group, &z0).ok()?;
    let m = q.group.order();
    if !m.is_power_of_two() {
        return None;
    }
    // V must be elementary abelian of exponent <= 2.
    if !q.group.is_abelian() || q.group.elements().any(|v| q.group.mul(v, v) != 0) {
        return None;
    }
    let mut reps = vec![usize::MAX; m];
    for g in group.elements() {
        let v = q.projection[g];
        if g < reps[v] {
            reps[v] = g;
        }
    }
    let eps: Vec<u8> = reps
        .iter()
        .map(|&r| u8::from(sigma.apply(r) != r))
        .collect();
    let mut bmat = vec![false; m * m];
    for u in 0..m {
        for v in 0..m {
            bmat[u * m + v] = group.commutator(reps[u], reps[v]) != group.identity();
        }
    }
    let rad_count = (0..m)
        .filter(|&v| (0..m).all(|u| !bmat[v * m + u]))
        .count();
    if !rad_count.is_power_of_two() {
        return None;
    }
    Some(TwistFrame {
        vgroup: q.group,
        reps,
        eps,
        bmat,
        dim: m.trailing_zeros(),
        rad_dim: rad_count.trailing_zeros(),
        z0,
    })
}

/// Projects the pool into the B-orthogonal complement of the hyperbolic
/// plane spanned by (x, y), dropping zeros and duplicates.
fn project_pool(frame: &TwistFrame, pool: &[usize], x: usize, y: usize) -> Vec<usize> {
    let mut next: Vec<usize> = pool
        .iter()
        .filter(|&&v| v != x && v != y)
        .map(|&v| {
            let mut w = v;
            if frame.b(v, y) {
                w = frame.vgroup.mul(w, x);
            }
            if frame.b(v, x) {
                w = frame.vgroup.mul(w, y);
            }
            w
        })
        .filter(|&w| w != 0)
        .collect();
    next.sort_unstable();
    next.dedup();
    next
}

/// Backtracking search for hyperbolic pairs (x_i, y_i) covering the
/// non-degenerate part of B with eps = 1 on every chosen vector. Returns
/// the pairs plus the residual (radical) vectors. `None` means no such
/// basis exists (the twist parity obstructs a full decomposition).
type PairDecomposition = (Vec<(usize, usize)>, Vec<usize>);

fn symplectic_pairs(frame: &TwistFrame, pool: Vec<usize>) -> Option<PairDecomposition> {
    let degenerate = pool
        .iter()
        .all(|&u| pool.iter().all(|&v| !frame.b(u, v)));
    if degenerate {
        return Some((Vec::new(), pool));
    }
    for (i, &x) in pool.iter().enumerate() {
        if frame.eps[x] == 0 {
            continue;
        }
        for &y in &pool[i + 1..] {
            if frame.eps[y] == 0 || !frame.b(x, y) {
                continue;
            }
            let next = project_pool(frame, &pool, x, y);
            if let Some((mut pairs, residual)) = symplectic_pairs(frame, next) {
                pairs.insert(0, (x, y));
                return Some((pairs, residual));
            }
        }
    }
    None
}

/// Non-backtracking maximal extraction of twisted hyperbolic pairs, used
/// when no full decomposition exists.
fn greedy_twisted_pairs(frame: &TwistFrame) -> Vec<(usize, usize)> {
    let mut pool: Vec<usize> = (1..frame.vgroup.order()).collect();
    let mut out = Vec::new();
    'outer: loop {
        for (i, &x) in pool.iter().enumerate() {
            if frame.eps[x] == 0 {
                continue;
            }
            for &y in &pool[i + 1..] {
                if frame.eps[y] == 0 || !frame.b(x, y) {
                    continue;
                }
                out.push((x, y));
                pool = project_pool(frame, &pool, x, y);
                continue 'outer;
            }
        }
        return out;
    }
}

/// Structural decision procedure. The certificate names the satisfied
/// case with re-verifiable witnesses, or `NotNormal`.
pub fn classify(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
) -> Result<ClassificationCertificate> {
    if group.order() > MAX_CLASSIFY_ORDER {
        return Err(Error::capability(format!(
            "classification is bounded to order {MAX_CLASSIFY_ORDER}, got {}",
            group.order()
        )));
    }
    let sets = fixed_and_moved_sets(group, spec.sigma());
    let reject = |sets: FixedMovedSets| ClassificationCertificate {
        case: TheoremCase::NotNormal,
        fixed_set: sets.fixed,
        moved_set: sets.moved,
        witnesses: CaseWitnesses::None,
    };

    if group.is_abelian() {
        return Ok(ClassificationCertificate {
            case: TheoremCase::Commutative,
            fixed_set: sets.fixed,
            moved_set: sets.moved,
            witnesses: CaseWitnesses::None,
        });
    }

    // Noncommutative instances require f to land in {1, -1}.
    let one = ring.one();
    let neg_one = ring.neg_one();
    if group
        .elements()
        .any(|g| spec.f().value(g) != one && spec.f().value(g) != neg_one)
    {
        return Ok(reject(sets));
    }

    if group_is_abelian_on(group, &sets.moved_closure) {
        // The moved set generates an abelian subgroup: only the
        // index-2-conjugation case can apply.
        if let Some((subgroup, b)) = find_case_i(group, ring, spec) {
            return Ok(ClassificationCertificate {
                case: TheoremCase::CaseI,
                fixed_set: sets.fixed,
                moved_set: sets.moved,
                witnesses: CaseWitnesses::CaseI { subgroup, b },
            });
        }
        return Ok(reject(sets));
    }

    // Central-product cases require derived subgroup of order exactly 2.
    let derived = derived_subgroup(group);
    if derived.len() != 2 {
        return Ok(reject(sets));
    }
    let c = derived.members()[1];
    let zeta = center(group);
    let Some(frame) = build_frame(group, spec.sigma(), c, &sets.fixed, &zeta) else {
        return Ok(reject(sets));
    };
    let rank = frame.dim - frame.rad_dim;

    if rank == 2 {
        if let Some(w) = find_case_ii(group, ring, spec, c, &frame, &sets, &zeta) {
            return Ok(w);
        }
        return Ok(reject(sets));
    }

    // rank >= 4: the product-of-sigma-groups cases. These require
    // characteristic 2 and trivial f; together with the gates already
    // passed (derived subgroup {e, c}, two-valued action) those
    // conditions force normality outright: for non-commuting g, h the
    // cross term is (gh + hg)(c^eps(g) + c^eps(h)), which is either
    // 2(...) = 0 or gh(1+c)^2 = gh(1+c^2) = 0.
    if ring.characteristic() != 2 || !spec.f().is_trivial(ring) {
        return Ok(reject(sets));
    }
    // A full decomposition into pairwise-commuting twisted pairs exists
    // exactly when the twist parity allows it; otherwise the certificate
    // carries the maximal extractable pairs and the (then non-abelian)
    // residual centralizer.
    let pool: Vec<usize> = (1..frame.vgroup.order()).collect();
    let (vpairs, complete) = match symplectic_pairs(&frame, pool) {
        Some((vpairs, residual)) => {
            debug_assert_eq!(residual.len() as u32 + 1, 1 << frame.rad_dim);
            (vpairs, true)
        }
        None => (greedy_twisted_pairs(&frame), false),
    };
    let mut pairs = Vec::new();
    let mut gens = Vec::new();
    for &(x, y) in &vpairs {
        let (a, b) = (frame.reps[x], frame.reps[y]);
        match detect_sigma_group(group, spec.sigma(), a, b) {
            Some(w) if w.commutator == c => {
                gens.push(a);
                gens.push(b);
                pairs.push(w);
            }
            _ if complete => return Ok(reject(sets)),
            _ => {}
        }
    }
    let s = ElementSubset::new(group.closure(&gens));
    let cent = centralizer(group, &s).expect("subset in range");
    if complete {
        if pairs.len() < 2
            || !group_is_abelian_on(group, &cent)
            || !product_covers(group, &s, &cent)
            || !s.intersect(&cent).is_subset_of(&zeta)
        {
            return Ok(reject(sets));
        }
        if frame.rad_dim == 0 {
            // All of the centralizer is fixed pointwise; rank is 2n.
            if cent.iter().any(|d| !spec.sigma().is_fixed(d))
                || frame.dim != 2 * pairs.len() as u32
            {
                return Ok(reject(sets));
            }
            return Ok(ClassificationCertificate {
                case: TheoremCase::CaseIiiA,
                fixed_set: sets.fixed,
                moved_set: sets.moved,
                witnesses: CaseWitnesses::CaseIii {
                    pairs,
                    centralizer: cent,
                    d: None,
                },
            });
        }
        if frame.rad_dim == 1 {
            if zeta.len() != 2 * frame.z0.len() || frame.dim != 2 * pairs.len() as u32 + 1 {
                return Ok(reject(sets));
            }
            let d = cent
                .iter()
                .find(|&d| spec.sigma().apply(d) == group.mul(d, c));
            let Some(d) = d else {
                return Ok(reject(sets));
            };
            return Ok(ClassificationCertificate {
                case: TheoremCase::CaseIiiB,
                fixed_set: sets.fixed,
                moved_set: sets.moved,
                witnesses: CaseWitnesses::CaseIii {
                    pairs,
                    centralizer: cent,
                    d: Some(d),
                },
            });
        }
        return Ok(reject(sets));
    }
    // Parity-obstructed family: certified by the characteristic-2
    // collapse above. The radical dimension still splits the sub-cases.
    match frame.rad_dim {
        0 => Ok(ClassificationCertificate {
            case: TheoremCase::CaseIiiA,
            fixed_set: sets.fixed,
            moved_set: sets.moved,
            witnesses: CaseWitnesses::CaseIii {
                pairs,
                centralizer: cent,
                d: None,
            },
        }),
        1 => {
            let d = cent
                .iter()
                .find(|&d| spec.sigma().apply(d) == group.mul(d, c));
            let Some(d) = d else {
                return Ok(reject(sets));
            };
            Ok(ClassificationCertificate {
                case: TheoremCase::CaseIiiB,
                fixed_set: sets.fixed,
                moved_set: sets.moved,
                witnesses: CaseWitnesses::CaseIii {
                    pairs,
                    centralizer: cent,
                    d: Some(d),
                },
            })
        }
        // Radical dimension >= 2 cannot occur: nonzero radical vectors
        // all carry eps = 1 while eps is linear on the radical.
        _ => Ok(reject(sets)),
    }
}

fn group_is_abelian_on(group: &Group, s: &ElementSubset) -> bool {
    s.iter().all(|g| s.iter().all(|h| group.commute(g, h)))
}

fn product_covers(group: &Group, s: &ElementSubset, t: &ElementSubset) -> bool {
    let mut hit = vec![false; group.order()];
    for g in s.iter() {
        for h in t.iter() {
            hit[group.mul(g, h)] = true;
        }
    }
    hit.into_iter().all(|b| b)
}

/// Searches for an abelian index-2 subgroup H and b outside it with
/// f(b) = -1, f = 1 on H, sigma(b) = b and sigma acting on H as the
/// (two-sided) conjugation by b.
fn find_case_i(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
) -> Option<(ElementSubset, usize)> {
    let sigma = spec.sigma();
    let f = spec.f();
    let one = ring.one();
    let neg_one = ring.neg_one();
    for h in crate::subgroup::index_two_subgroups(group) {
        if !group_is_abelian_on(group, &h) {
            continue;
        }
        if h.iter().any(|x| f.value(x) != one) {
            continue;
        }
        for b in group.elements() {
            if h.contains(b) || sigma.apply(b) != b || f.value(b) != neg_one {
                continue;
            }
            let ok = h.iter().all(|x| {
                let s = sigma.apply(x);
                s == group.conjugate(x, b) && s == group.conjugate(x, group.inverse(b))
            });
            if !ok {
                continue;
            }
            let mut gens = h.members().to_vec();
            gens.push(b);
            if group.closure(&gens).len() == group.order() {
                return Some((h, b));
            }
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn find_case_ii(
    group: &Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
    c: usize,
    frame: &TwistFrame,
    sets: &FixedMovedSets,
    zeta: &ElementSubset,
) -> Option<ClassificationCertificate> {
    let sigma = spec.sigma();
    let f = spec.f();
    let one = ring.one();
    let neg_one = ring.neg_one();
    let moved = sets.moved.members();
    for (i, &a) in moved.iter().enumerate() {
        for &b in &moved[i + 1..] {
            if group.commutator(a, b) == group.identity() {
                continue;
            }
            let Some(w) = detect_sigma_group(group, sigma, a, b) else {
                continue;
            };
            if w.commutator != c {
                continue;
            }
            let cent = centralizer(group, &w.subgroup).expect("subset in range");
            if !group_is_abelian_on(group, &cent) {
                continue;
            }
            if !product_covers(group, &w.subgroup, &cent) {
                continue;
            }
            if !w.subgroup.intersect(&cent).is_subset_of(zeta) {
                continue;
            }
            // The sigma-group must lie inside the kernel of f.
            if w.subgroup.iter().any(|g| f.value(g) != one) {
                continue;
            }
            if frame.dim == 2 {
                // Sub-case (a): sigma fixes the centralizer pointwise,
                // centralizer in the kernel, fixed set = center, rank 2.
                let fixes_cent = cent.iter().all(|d| sigma.is_fixed(d));
                let cent_in_kernel = cent.iter().all(|d| f.value(d) == one);
                let fixed_is_center = sets.fixed == *zeta;
                let mut gens = frame.z0.members().to_vec();
                gens.extend_from_slice(&[a, b]);
                let spanning = group.closure(&gens).len() == group.order();
                if fixes_cent && cent_in_kernel && fixed_is_center && spanning {
                    return Some(ClassificationCertificate {
                        case: TheoremCase::CaseIiA,
                        fixed_set: sets.fixed.clone(),
                        moved_set: sets.moved.clone(),
                        witnesses: CaseWitnesses::CaseIi {
                            pair: w,
                            centralizer: cent,
                            d: None,
                        },
                    });
                }
            } else if frame.dim == 3 {
                // Sub-case (b): central fixed subgroup of index 2 in the
                // center, rank 3, with d in the centralizer carrying the
                // twist and f(d) = -1.
                if zeta.len() != 2 * frame.z0.len() {
                    continue;
                }
                let d = cent.iter().find(|&d| {
                    sigma.apply(d) == group.mul(d, c) && f.value(d) == neg_one
                });
                let Some(d) = d else {
                    continue;
                };
                let mut gens = frame.z0.members().to_vec();
                gens.extend_from_slice(&[a, b, d]);
                if group.closure(&gens).len() != group.order() {
                    continue;
                }
                return Some(ClassificationCertificate {
                    case: TheoremCase::CaseIiB,
                    fixed_set: sets.fixed.clone(),
                    moved_set: sets.moved.clone(),
                    witnesses: CaseWitnesses::CaseIi {
                        pair: w,
                        centralizer: cent,
                        d: Some(d),
                    },
                });
            }
        }
    }
    None
}
