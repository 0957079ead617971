//! Exact finite-group arithmetic over explicit multiplication tables.
//!
//! Groups are stored as dense Cayley tables with element indices
//! `0..order`, index 0 always being the identity. Every constructor and the
//! text parser validate the full set of table invariants (Latin square,
//! associativity, identity, inverses) before a `Group` value exists, so all
//! downstream arithmetic is unchecked table lookup.

use serde::Serialize;

use crate::error::{Error, Result};

/// Hard cap on constructed group orders. Everything this crate does is
/// exact and enumerative; beyond this the subgroup and morphism machinery
/// would stop being desk-scale.
pub const MAX_GROUP_ORDER: usize = 64;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct Group {
    name: String,
    order: usize,
    /// Flattened table, `table[g * order + h]` = index of `g * h`.
    table: Vec<usize>,
    inverses: Vec<usize>,
    identity: usize,
    abelian: bool,
}

impl Group {
    /// Builds a group from explicit table rows, validating every invariant.
    pub fn from_rows(name: &str, rows: &[Vec<usize>]) -> Result<Group> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::input("group table must have at least one row"));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Group::from_flat(name.to_string(), order, flat)
    }

    fn from_flat(name: String, order: usize, table: Vec<usize>) -> Result<Group> {
        if order > MAX_GROUP_ORDER {
            return Err(Error::capability(format!(
                "group order {order} exceeds supported maximum {MAX_GROUP_ORDER}"
            )));
        }
        for (pos, &v) in table.iter().enumerate() {
            if v >= order {
                return Err(Error::input(format!(
                    "table entry at row {} column {} is {v}, out of range 0..{order}",
                    pos / order,
                    pos % order
                )));
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen = vec![false; order];
        for g in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..order {
                let v = table[g * order + h];
                if seen[v] {
                    return Err(Error::input(format!(
                        "row {g} is not a permutation: value {v} repeats"
                    )));
                }
                seen[v] = true;
            }
        }
        for h in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for g in 0..order {
                let v = table[g * order + h];
                if seen[v] {
                    return Err(Error::input(format!(
                        "column {h} is not a permutation: value {v} repeats"
                    )));
                }
                seen[v] = true;
            }
        }
        // Identity must be element 0.
        for g in 0..order {
            if table[g] != g || table[g * order] != g {
                return Err(Error::input(format!(
                    "identity must be index 0, but 0 does not act trivially on {g}"
                )));
            }
        }
        // Full associativity scan.
        for g in 0..order {
            for h in 0..order {
                let gh = table[g * order + h];
                for k in 0..order {
                    let lhs = table[gh * order + k];
                    let rhs = table[g * order + table[h * order + k]];
                    if lhs != rhs {
                        return Err(Error::input(format!(
                            "associativity fails at ({g},{h},{k})"
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![0usize; order];
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| table[g * order + h] == 0)
                .expect("Latin square row contains identity");
            if table[inv * order + g] != 0 {
                return Err(Error::input(format!(
                    "element {g} has distinct left and right inverses"
                )));
            }
            inverses[g] = inv;
        }
        let abelian = (0..order)
            .all(|g| (0..order).all(|h| table[g * order + h] == table[h * order + g]));
        Ok(Group {
            name,
            order,
            table,
            inverses,
            identity: 0,
            abelian,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Unchecked product; panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    /// Checked product returning an input error on bad indices.
    pub fn multiply(&self, g: usize, h: usize) -> Result<usize> {
        if g >= self.order || h >= self.order {
            return Err(Error::input(format!(
                "element index out of range: ({g},{h}) in group of order {}",
                self.order
            )));
        }
        Ok(self.mul(g, h))
    }

    #[inline]
    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// g⁻¹h⁻¹gh
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let gi = self.inverse(g);
        let hi = self.inverse(h);
        self.mul(self.mul(self.mul(gi, hi), g), h)
    }

    /// h⁻¹gh
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inverse(h), g), h)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    /// Multiplicative closure of a seed set; always contains the identity.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        let mut members = vec![self.identity];
        in_set[self.identity] = true;
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                members.push(s);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let mut j = 0;
            while j < members.len() {
                let y = members[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_subgroup(&self, s: &ElementSubset) -> bool {
        if !s.contains(self.identity) {
            return false;
        }
        if s.members().iter().any(|&g| g >= self.order) {
            return false;
        }
        s.members().iter().all(|&g| {
            s.contains(self.inverse(g)) && s.members().iter().all(|&h| s.contains(self.mul(g, h)))
        })
    }

    /// Re-indexes a subgroup as a standalone group. Returns the group plus
    /// the member list mapping new indices back to parent indices.
    pub fn subgroup_group(&self, s: &ElementSubset) -> Result<(Group, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::input("subset is not a subgroup"));
        }
        // The identity is the least member, so index 0 is preserved.
        let members: Vec<usize> = s.members().to_vec();
        let index_of = |g: usize| members.binary_search(&g).expect("closed subset");
        let m = members.len();
        let mut flat = Vec::with_capacity(m * m);
        for &g in &members {
            for &h in &members {
                flat.push(index_of(self.mul(g, h)));
            }
        }
        let sub = Group::from_flat(format!("{}|sub{}", self.name, m), m, flat)?;
        Ok((sub, members))
    }

    /// Parses the Cayley-table text format: first line the order `n`,
    /// then `n` lines of `n` whitespace-separated 0-based indices
    /// (row `g` lists `g*h` for `h = 0..n`). Index 0 must be the identity.
    pub fn parse_cayley_text(name: &str, text: &str) -> Result<Group> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::input("empty Cayley table text"))?;
        let order: usize = first
            .parse()
            .map_err(|_| Error::input(format!("bad order line {first:?}")))?;
        let mut rows = Vec::with_capacity(order);
        for i in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::input(format!("missing table row {i}")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::input(format!("bad table entry {tok:?} in row {i}")))
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::input("trailing content after Cayley table"));
        }
        Group::from_rows(name, &rows)
    }

    /// Serializes to the same text format `parse_cayley_text` reads.
    pub fn cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for g in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|h| self.mul(g, h).to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A sorted, duplicate-free set of element indices of some parent group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ElementSubset {
    members: Vec<usize>,
}

impl ElementSubset {
    pub fn new(mut members: Vec<usize>) -> ElementSubset {
        members.sort_unstable();
        members.dedup();
        ElementSubset { members }
    }

    pub fn singleton(g: usize) -> ElementSubset {
        ElementSubset { members: vec![g] }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.members.iter().all(|&g| other.contains(g))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn complement(&self, order: usize) -> ElementSubset {
        ElementSubset {
            members: (0..order).filter(|&g| !self.contains(g)).collect(),
        }
    }

    pub fn intersect(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&g| other.contains(g))
                .collect(),
        }
    }
}

/// Cyclic group of order `n`.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::input("cyclic group order must be at least 1"));
    }
    let mut flat = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            flat.push((g + h) % n);
        }
    }
    Group::from_flat(format!("C{n}"), n, flat)
}

/// Dihedral group of order `2n`: indices `0..n` are rotations `r^i`,
/// `n..2n` are reflections `r^i s`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::input("dihedral parameter must be at least 1"));
    }
    let order = 2 * n;
    let idx = |rot: usize, refl: bool| if refl { n + rot % n } else { rot % n };
    let mut flat = Vec::with_capacity(order * order);
    for g in 0..order {
        let (gi, gr) = (g % n, g >= n);
        for h in 0..order {
            let (hi, hr) = (h % n, h >= n);
            let e = match (gr, hr) {
                (false, false) => idx(gi + hi, false),
                (false, true) => idx(gi + hi, true),
                (true, false) => idx(gi + n - hi, true),
                (true, true) => idx(gi + n - hi, false),
            };
            flat.push(e);
        }
    }
    Group::from_flat(format!("D{n}"), order, flat)
}

/// Generalized quaternion group of order `m` for `m` in `{8, 16}`.
/// Indices `0..m/2` are powers `x^i`, the rest are `x^i y`.
pub fn quaternion(m: usize) -> Result<Group> {
    if m != 8 && m != 16 {
        return Err(Error::input(format!(
            "quaternion order must be 8 or 16, got {m}"
        )));
    }
    let half = m / 2;
    let quarter = half / 2; // y^2 = x^quarter
    let mut flat = Vec::with_capacity(m * m);
    for g in 0..m {
        let (gi, gy) = (g % half, g >= half);
        for h in 0..m {
            let (hi, hy) = (h % half, h >= half);
            let e = match (gy, hy) {
                (false, false) => (gi + hi) % half,
                (false, true) => half + (gi + hi) % half,
                (true, false) => half + (gi + half - hi) % half,
                (true, true) => (gi + half - hi + quarter) % half,
            };
            flat.push(e);
        }
    }
    Group::from_flat(format!("Q{m}"), m, flat)
}

/// Elementary abelian group of order `p^k`, indices read as base-`p`
/// digit vectors added componentwise.
pub fn elementary_abelian(p: usize, k: u32) -> Result<Group> {
    let small_prime = matches!(p, 2 | 3 | 5 | 7 | 11 | 13 | 17 | 19 | 23 | 29 | 31 | 37 | 41 | 43 | 47 | 53 | 59 | 61);
    if !small_prime {
        return Err(Error::input(format!("{p} is not a supported prime")));
    }
    if k == 0 {
        return Err(Error::input("elementary abelian rank must be at least 1"));
    }
    let order = p
        .checked_pow(k)
        .filter(|&o| o <= MAX_GROUP_ORDER)
        .ok_or_else(|| {
            Error::capability(format!(
                "elementary abelian order {p}^{k} exceeds maximum {MAX_GROUP_ORDER}"
            ))
        })?;
    let add = |g: usize, h: usize| {
        let (mut g, mut h) = (g, h);
        let mut out = 0;
        let mut base = 1;
        for _ in 0..k {
            out += ((g % p + h % p) % p) * base;
            g /= p;
            h /= p;
            base *= p;
        }
        out
    };
    let mut flat = Vec::with_capacity(order * order);
    for g in 0..order {
        for h in 0..order {
            flat.push(add(g, h));
        }
    }
    Group::from_flat(format!("C{p}^{k}"), order, flat)
}

/// Direct product with lexicographic indexing `(a, b) -> a * |B| + b`.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let order = a.order() * b.order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::capability(format!(
            "direct product order {order} exceeds maximum {MAX_GROUP_ORDER}"
        )));
    }
    let bn = b.order();
    let mut flat = Vec::with_capacity(order * order);
    for g in 0..order {
        let (ga, gb) = (g / bn, g % bn);
        for h in 0..order {
            let (ha, hb) = (h / bn, h % bn);
            flat.push(a.mul(ga, ha) * bn + b.mul(gb, hb));
        }
    }
    Group::from_flat(format!("{}x{}", a.name(), b.name()), order, flat)
}

/// Result of a quotient construction: the coset group plus the canonical
/// projection (element index to coset index).
pub struct Quotient {
    pub group: Group,
    pub projection: Vec<usize>,
}

/// Quotient by a normal subgroup. Cosets are indexed by their least
/// member, in ascending order, so the identity coset is index 0.
pub fn quotient(g: &Group, n: &ElementSubset) -> Result<Quotient> {
    if !g.is_subgroup(n) {
        return Err(Error::input("quotient requires a subgroup"));
    }
    for x in g.elements() {
        for h in n.iter() {
            if !n.contains(g.conjugate(h, x)) {
                return Err(Error::input(format!(
                    "subgroup is not normal: conjugating {h} by {x} escapes"
                )));
            }
        }
    }
    let order = g.order();
    let mut coset_min = vec![usize::MAX; order];
    for x in g.elements() {
        if coset_min[x] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = n.iter().map(|h| g.mul(x, h)).collect();
        let min = *members.iter().min().expect("nonempty coset");
        for m in members {
            coset_min[m] = min;
        }
    }
    let mut reps: Vec<usize> = coset_min.clone();
    reps.sort_unstable();
    reps.dedup();
    let proj: Vec<usize> = coset_min
        .iter()
        .map(|&m| reps.binary_search(&m).expect("coset rep"))
        .collect();
    let q = reps.len();
    let mut flat = Vec::with_capacity(q * q);
    for &r in &reps {
        for &s in &reps {
            flat.push(proj[g.mul(r, s)]);
        }
    }
    let group = Group::from_flat(format!("{}/N{}", g.name(), n.len()), q, flat)?;
    Ok(Quotient {
        group,
        projection: proj,
    })
}

/// Result of a central product construction, keeping the two embeddings
/// so callers can locate the factor generators inside the product.
pub struct CentralProduct {
    pub group: Group,
    pub embed_a: Vec<usize>,
    pub embed_b: Vec<usize>,
}

/// Central product `(A x B) / {(z, theta(z)^-1)}` for an isomorphism
/// `theta` between central subgroups `za` of `A` and `zb` of `B`.
pub fn central_product(
    a: &Group,
    b: &Group,
    za: &ElementSubset,
    zb: &ElementSubset,
    theta: &[(usize, usize)],
) -> Result<CentralProduct> {
    for (sub, grp, side) in [(za, a, "A"), (zb, b, "B")] {
        if !grp.is_subgroup(sub) {
            return Err(Error::input(format!("Z{side} is not a subgroup")));
        }
        let central = sub
            .iter()
            .all(|z| grp.elements().all(|g| grp.commute(z, g)));
        if !central {
            return Err(Error::input(format!("Z{side} is not central in {side}")));
        }
    }
    if theta.len() != za.len() {
        return Err(Error::input("theta must be defined on exactly ZA"));
    }
    let mut map = vec![usize::MAX; a.order()];
    let mut image = Vec::new();
    for &(x, y) in theta {
        if !za.contains(x) || !zb.contains(y) {
            return Err(Error::input("theta pair outside ZA -> ZB"));
        }
        if map[x] != usize::MAX {
            return Err(Error::input(format!("theta defined twice at {x}")));
        }
        map[x] = y;
        image.push(y);
    }
    image.sort_unstable();
    image.dedup();
    if image.len() != zb.len() {
        return Err(Error::input("theta is not a bijection onto ZB"));
    }
    for &(x1, _) in theta {
        for &(x2, _) in theta {
            let lhs = map[a.mul(x1, x2)];
            let rhs = b.mul(map[x1], map[x2]);
            if lhs != rhs {
                return Err(Error::input(format!(
                    "theta is not multiplicative at ({x1},{x2})"
                )));
            }
        }
    }
    let prod = direct_product(a, b)?;
    let bn = b.order();
    let kernel: Vec<usize> = za
        .iter()
        .map(|z| z * bn + b.inverse(map[z]))
        .collect();
    let q = quotient(&prod, &ElementSubset::new(kernel))?;
    let embed_a: Vec<usize> = a.elements().map(|x| q.projection[x * bn]).collect();
    let embed_b: Vec<usize> = b.elements().map(|y| q.projection[y]).collect();
    let mut group = q.group;
    group.set_name(format!("{}Y{}", a.name(), b.name()));
    Ok(CentralProduct {
        group,
        embed_a,
        embed_b,
    })
}
