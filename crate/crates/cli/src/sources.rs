//! Parsing of the CLI's group / ring / sigma / f source strings.

use std::fs;
use std::path::Path;

use atlas_core::catalog::{self, CatalogEntry};
use atlas_core::error::{Error, Result};
use atlas_core::group::{self, Group};
use atlas_core::morphism::{parse_f_line, parse_sigma_line, AntiAutomorphism, UnitHomomorphism};
use atlas_core::ring::CoeffRing;

/// Grammar: `cyclic:N | dihedral:N | quaternion:N | elementary:P^K |
/// d4yc4 | d4yd4 | q8yq8 | file:PATH`, with `*` for direct products.
pub fn parse_group_source(source: &str) -> Result<CatalogEntry> {
    let parts: Vec<&str> = source.split('*').map(str::trim).collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::input(format!("empty factor in group source {source:?}")));
    }
    let mut entry = parse_group_atom(parts[0])?;
    for part in &parts[1..] {
        let next = parse_group_atom(part)?;
        let product = group::direct_product(&entry.group, &next.group)?;
        entry = CatalogEntry {
            label: product.name().to_string(),
            group: product,
            twist_seed: None,
        };
    }
    Ok(entry)
}

fn parse_group_atom(atom: &str) -> Result<CatalogEntry> {
    match atom.to_ascii_lowercase().as_str() {
        "d4yc4" => return Ok(catalog::d4_y_c4()),
        "d4yd4" => return Ok(catalog::d4_y_d4()),
        "q8yq8" => return Ok(catalog::q8_y_q8()),
        _ => {}
    }
    let (kind, param) = atom
        .split_once(':')
        .ok_or_else(|| Error::input(format!("unrecognized group source {atom:?}")))?;
    let plain = |g: Group| CatalogEntry {
        label: g.name().to_string(),
        group: g,
        twist_seed: None,
    };
    match kind {
        "cyclic" => Ok(plain(group::cyclic(parse_num(param)?)?)),
        "dihedral" => Ok(plain(group::dihedral(parse_num(param)?)?)),
        "quaternion" => Ok(plain(group::quaternion(parse_num(param)?)?)),
        "elementary" => {
            let (p, k) = param.split_once('^').ok_or_else(|| {
                Error::input(format!("elementary group wants P^K, got {param:?}"))
            })?;
            let g = group::elementary_abelian(parse_num(p)?, parse_num(k)? as u32)?;
            Ok(plain(g))
        }
        "file" => {
            let text = fs::read_to_string(param)
                .map_err(|e| Error::input(format!("cannot read group file {param:?}: {e}")))?;
            let label = Path::new(param)
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("file-group");
            Ok(plain(Group::parse_cayley_text(label, &text)?))
        }
        _ => Err(Error::input(format!("unrecognized group source {atom:?}"))),
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::input(format!("bad numeric parameter {s:?}")))
}

/// Grammar: `builtin:classical | builtin:theorem-i | builtin:case-iii |
/// file:PATH | indices:i0,i1,...`. A sigma file is read from its first
/// non-empty line, so a combined two-line involution spec file works for
/// both `--sigma file:X` and `--f file:X`.
pub fn parse_sigma_source(entry: &CatalogEntry, source: &str) -> Result<AntiAutomorphism> {
    let (kind, param) = source
        .split_once(':')
        .ok_or_else(|| Error::input(format!("unrecognized sigma source {source:?}")))?;
    match kind {
        "builtin" => catalog::builtin_sigma(entry, param),
        "file" => {
            let text = fs::read_to_string(param)
                .map_err(|e| Error::input(format!("cannot read sigma file {param:?}: {e}")))?;
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::input("sigma file is empty"))?;
            parse_sigma_line(&entry.group, line)
        }
        "indices" => parse_sigma_line(&entry.group, &param.replace(',', " ")),
        _ => Err(Error::input(format!("unrecognized sigma source {source:?}"))),
    }
}

/// Grammar: `builtin:trivial | builtin:sign | file:PATH | values:v0,v1,...`.
/// An f file is read from its last non-empty line.
pub fn parse_f_source(
    entry: &CatalogEntry,
    ring: &CoeffRing,
    source: &str,
) -> Result<UnitHomomorphism> {
    let (kind, param) = source
        .split_once(':')
        .ok_or_else(|| Error::input(format!("unrecognized f source {source:?}")))?;
    match kind {
        "builtin" => catalog::builtin_f(entry, ring, param),
        "file" => {
            let text = fs::read_to_string(param)
                .map_err(|e| Error::input(format!("cannot read f file {param:?}: {e}")))?;
            let line = text
                .lines()
                .map(str::trim).rfind(|l| !l.is_empty())
                .ok_or_else(|| Error::input("f file is empty"))?;
            parse_f_line(&entry.group, ring, line)
        }
        "values" => parse_f_line(&entry.group, ring, &param.replace(',', " ")),
        _ => Err(Error::input(format!("unrecognized f source {source:?}"))),
    }
}

pub fn parse_ring_list(s: &str) -> Result<Vec<String>> {
    let labels: Vec<String> = s
        .split(',')
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect();
    if labels.is_empty() {
        return Err(Error::input("empty ring list"));
    }
    Ok(labels)
}
