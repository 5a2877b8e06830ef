//! Reading and writing character tables in the line-oriented text format:
//!
//! ```text
//! group <label> order <N>
//! class <name> size <int> rep <simple reflection indices>
//! irrep <label> dim <int> : <value> <value> ...
//! ```
//!
//! `#` starts a comment. Loaded tables are validated and never repaired.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::rootsys::CartanType;
use crate::weyl::{ClassInfo, WeylGroup};

use super::labels::assign_labels;
use super::table::{normalize_label, CharacterTable, Irrep, IrrepLabel};

fn parse_label(ty: CartanType, s: &str) -> Option<IrrepLabel> {
    match ty {
        CartanType::A(_) => s.parse().ok().map(IrrepLabel::Partition),
        CartanType::B(_) => s.parse().ok().map(IrrepLabel::Bipartition),
        CartanType::D(_) => {
            let (body, tag) = match s.rsplit_once('_') {
                Some((b, "I")) => (b, Some(true)),
                Some((b, "II")) => (b, Some(false)),
                _ => (s, None),
            };
            let b: crate::algebra::Bipartition = body.parse().ok()?;
            match tag {
                Some(t) if b.left == b.right => Some(IrrepLabel::Split(b.left, t)),
                None if b.left != b.right => Some(IrrepLabel::Bipartition(b)),
                _ => None,
            }
        }
        _ => Some(IrrepLabel::Named(s.to_string())),
    }
}

/// Parses a table without validating it.
pub fn parse_table_unchecked(text: &str) -> Result<CharacterTable> {
    let mut header: Option<(CartanType, u128)> = None;
    let mut classes = Vec::new();
    let mut irreps = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
        let int = |s: Option<&str>, what: &str| -> Result<i64> {
            s.ok_or_else(|| err(&format!("missing {what}")))?
                .parse::<i64>()
                .map_err(|_| err(&format!("{what} is not an integer")))
        };
        let mut tok = content.split_whitespace();
        match tok.next() {
            Some("group") => {
                if header.is_some() {
                    return Err(err("second group line"));
                }
                let label = tok.next().ok_or_else(|| err("missing group label"))?;
                let ty: CartanType = CartanType::parse(label, None).map_err(|e| err(&e.to_string()))?;
                if tok.next() != Some("order") {
                    return Err(err("expected 'order'"));
                }
                let order = tok.next().and_then(|s| s.parse::<u128>().ok()).ok_or_else(|| err("bad order"))?;
                if order != ty.group_order() {
                    return Err(err(&format!("order {order} is not |W({ty})| = {}", ty.group_order())));
                }
                header = Some((ty, order));
            }
            Some("class") => {
                if header.is_none() || !irreps.is_empty() {
                    return Err(err("class line out of place"));
                }
                let name = tok.next().ok_or_else(|| err("missing class name"))?.to_string();
                if tok.next() != Some("size") {
                    return Err(err("expected 'size'"));
                }
                let size = int(tok.next(), "size")?;
                if size <= 0 {
                    return Err(err("class size must be positive"));
                }
                if tok.next() != Some("rep") {
                    return Err(err("expected 'rep'"));
                }
                let word = tok
                    .map(|s| s.parse::<usize>().map_err(|_| err("bad simple reflection index")))
                    .collect::<Result<Vec<_>>>()?;
                classes.push(ClassInfo { name, size: size as u64, word });
            }
            Some("irrep") => {
                let (ty, _) = header.ok_or_else(|| err("irrep before group line"))?;
                let label = tok.next().ok_or_else(|| err("missing irrep label"))?;
                let label = parse_label(ty, label).ok_or_else(|| err(&format!("bad label {label} for {ty}")))?;
                if tok.next() != Some("dim") {
                    return Err(err("expected 'dim'"));
                }
                let dim = int(tok.next(), "dim")?;
                if tok.next() != Some(":") {
                    return Err(err("expected ':'"));
                }
                let values = tok
                    .map(|s| s.parse::<i64>().map_err(|_| err(&format!("non-integer value {s}"))))
                    .collect::<Result<Vec<_>>>()?;
                if values.len() != classes.len() {
                    return Err(err(&format!("{} values for {} classes", values.len(), classes.len())));
                }
                if values[0] != dim {
                    return Err(err("dim differs from the value at the identity"));
                }
                irreps.push(Irrep::new(label, values));
            }
            Some(other) => return Err(err(&format!("unknown record '{other}'"))),
            None => unreachable!("non-empty line"),
        }
    }
    let (ty, _) = header.ok_or(Error::Parse { line: 0, msg: "missing group line".into() })?;
    CharacterTable::new(WeylGroup::of_type(ty)?, classes, irreps)
}

/// Parses, validates and annotates a table.
pub fn parse_table(text: &str) -> Result<CharacterTable> {
    let mut t = parse_table_unchecked(text)?;
    t.validate()?;
    assign_labels(&mut t)?;
    Ok(t)
}

pub fn load_table(path: &Path) -> Result<CharacterTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}

/// Serialises a table; `parse_table` reproduces it exactly.
pub fn write_table(t: &CharacterTable) -> String {
    let mut s = String::new();
    writeln!(s, "group {} order {}", t.cartan_type(), t.order()).unwrap();
    for c in t.classes() {
        let w: Vec<String> = c.word.iter().map(|i| i.to_string()).collect();
        let rep = if w.is_empty() { String::new() } else { format!(" {}", w.join(" ")) };
        writeln!(s, "class {} size {} rep{rep}", c.name, c.size).unwrap();
    }
    for ir in t.irreps() {
        let v: Vec<String> = ir.values.iter().map(|x| x.to_string()).collect();
        writeln!(s, "irrep {} dim {} : {}", ir.label, ir.dim(), v.join(" ")).unwrap();
    }
    s
}

pub fn save_table(t: &CharacterTable, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, write_table(t))?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Labels compare equal after normalisation.
pub fn same_label(a: &str, b: &str) -> bool {
    normalize_label(a) == normalize_label(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::classical_table;

    #[test]
    fn round_trip() {
        for ty in [CartanType::B(3), CartanType::D(4), CartanType::A(3)] {
            let t = classical_table(ty).unwrap();
            let text = write_table(&t);
            let u = parse_table(&text).unwrap();
            assert_eq!(write_table(&u), text);
        }
    }

    #[test]
    fn corruption_rejected() {
        let t = classical_table(CartanType::B(3)).unwrap();
        let text = write_table(&t);
        // flip one character value
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        let last = lines.len() - 1;
        let mut parts: Vec<String> = lines[last].split(' ').map(String::from).collect();
        let k = parts.len() - 1;
        let v: i64 = parts[k].parse().unwrap();
        parts[k] = (v + 1).to_string();
        lines[last] = parts.join(" ");
        let err = parse_table(&lines.join("\n")).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
        assert!(matches!(parse_table("group B3 order 47\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_table("group B2 order 8\nclass 1 size 1 rep\nirrep (2)x(0) dim 1 : 1.5\n"),
            Err(Error::Parse { .. })
        ));
    }
}
