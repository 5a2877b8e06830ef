//! Where tables come from: combinatorics for classical types, the class-sum
//! method for small exceptional groups (with an on-disk cache), and bundled
//! data files for `E7` and `E8`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Rank2Label};
use crate::weyl::{fill_order_names, ClassInfo, WeylGroup, DEFAULT_ENUMERATION_CAP};

use super::classical::classical_table;
use super::dixon::compute_table;
use super::invariants::{tensor_decompose, wedge_class_function};
use super::io::{load_table, parse_table_unchecked, save_table};
use super::labels::{assign_labels, sort_irreps};
use super::table::{CharacterTable, Irrep};

/// Bumped whenever computed tables could change; part of every cache key.
pub const ENGINE_VERSION: u32 = 1;

/// Environment variable naming the default data directory.
pub const DATA_DIR_ENV: &str = "CHEREDNIK_DATA_DIR";

/// Data directory: the environment variable, else the bundled `data/`.
pub fn default_data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("data"))
}

/// Data file name for a type, e.g. `e8.tbl`.
pub fn data_file_name(ty: CartanType) -> String {
    format!("{}.tbl", ty.to_string().to_ascii_lowercase())
}

/// Cache file name for a computed table.
pub fn cache_file_name(ty: CartanType) -> String {
    format!("{ty}.v{ENGINE_VERSION}.tbl")
}

/// Supplies validated character tables, memoised per type.
#[derive(Debug)]
pub struct TableProvider {
    data_dir: PathBuf,
    cache_dir: Option<PathBuf>,
    memo: Mutex<HashMap<CartanType, CharacterTable>>,
}

impl Default for TableProvider {
    fn default() -> Self {
        TableProvider::new(default_data_dir(), None)
    }
}

impl TableProvider {
    pub fn new(data_dir: PathBuf, cache_dir: Option<PathBuf>) -> Self {
        TableProvider { data_dir, cache_dir, memo: Mutex::new(HashMap::new()) }
    }

    pub fn data_dir(&self) -> &Path {
        &self.data_dir
    }

    /// Whether a table for this type can be produced.
    pub fn available(&self, ty: CartanType) -> bool {
        !matches!(ty, CartanType::E7 | CartanType::E8) || self.data_dir.join(data_file_name(ty)).exists()
    }

    pub fn table(&self, ty: CartanType) -> Result<CharacterTable> {
        if let Some(t) = self.memo.lock().expect("memo lock").get(&ty) {
            return Ok(t.clone());
        }
        let t = self.build(ty)?;
        self.memo.lock().expect("memo lock").insert(ty, t.clone());
        Ok(t)
    }

    fn build(&self, ty: CartanType) -> Result<CharacterTable> {
        match ty {
            CartanType::A(_) | CartanType::B(_) | CartanType::D(_) => {
                let mut t = classical_table(ty)?;
                sort_irreps(&mut t)?;
                Ok(t)
            }
            CartanType::E7 | CartanType::E8 => {
                let path = self.data_dir.join(data_file_name(ty));
                if !path.exists() {
                    return Err(Error::MissingData(path.display().to_string()));
                }
                load_table(&path)
            }
            _ => {
                let cached = self.cache_dir.as_ref().map(|d| d.join(cache_file_name(ty)));
                if let Some(p) = cached.as_ref().filter(|p| p.exists()) {
                    match load_table(p) {
                        Ok(t) if t.cartan_type() == ty => return Ok(t),
                        // corrupted entries are discarded
                        _ => std::fs::remove_file(p)?,
                    }
                }
                let t = computed_table(ty)?;
                if let Some(p) = cached {
                    save_table(&t, &p)?;
                }
                Ok(t)
            }
        }
    }
}

/// Computes, names, orders and validates the table of an enumerable group.
pub fn computed_table(ty: CartanType) -> Result<CharacterTable> {
    let g = WeylGroup::of_type(ty)?;
    let mut t = compute_table(&g, DEFAULT_ENUMERATION_CAP)?;
    assign_labels(&mut t)?;
    sort_irreps(&mut t)?;
    t.validate()?;
    Ok(t)
}

/// Turns a raw table (provisional class and irrep names) into a named one.
///
/// Classes are ordered by (element order, size, raw position) and the
/// classes of `1`, `A1`, `2A1` and `A2` are located by fingerprints of model
/// elements, which must be unique. Representative words are checked
/// against the table: every exterior power of the reflection representation,
/// evaluated on the words, must be an irreducible row.
pub fn import_raw(text: &str) -> Result<CharacterTable> {
    let raw = parse_table_unchecked(text)?;
    raw.validate()?;
    let g = raw.group().clone();
    let rs = g.root_system();
    let mut order: Vec<(usize, u64, usize)> = raw
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| Ok((g.from_word(&c.word)?.order(), c.size, i)))
        .collect::<Result<_>>()?;
    order.sort();
    let keys: Vec<_> =
        order.iter().map(|&(_, _, i)| Ok(g.class_key(&g.from_word(&raw.classes()[i].word)?))).collect::<Result<_>>()?;
    let mut names: Vec<Option<String>> = vec![None; order.len()];
    names[0] = Some("1".into());
    let mut model = |name: &str, e: crate::weyl::Element| -> Result<()> {
        let k = g.class_key(&e);
        let hits: Vec<usize> = (0..keys.len()).filter(|&c| keys[c] == k).collect();
        match hits.as_slice() {
            [c] => {
                names[*c] = Some(name.to_string());
                Ok(())
            }
            _ => Err(Error::Validation(format!("{} classes match the model element of {name}", hits.len()))),
        }
    };
    model("A1", g.reflection(0))?;
    let n = rs.num_positive();
    for (name, label) in [("2A1", Rank2Label::A1A1), ("A2", Rank2Label::A2)] {
        let (a, b) = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| rs.rank2_label(a, b).ok() == Some(label))
            .ok_or_else(|| Error::Validation(format!("no pair of type {name}")))?;
        model(name, g.reflection(a).compose(&g.reflection(b)))?;
    }
    fill_order_names(&mut names, &order.iter().map(|o| o.0).collect::<Vec<_>>());
    let classes: Vec<ClassInfo> = order
        .iter()
        .zip(names)
        .map(|(&(_, _, i), name)| ClassInfo { name: name.expect("all named"), ..raw.classes()[i].clone() })
        .collect();
    let irreps: Vec<Irrep> = raw
        .irreps()
        .iter()
        .map(|ir| Irrep::new(ir.label.clone(), order.iter().map(|&(_, _, i)| ir.values[i]).collect()))
        .collect();
    let mut t = CharacterTable::new(g, classes, irreps)?;
    t.validate()?;
    for l in 0..=t.group().rank() {
        let d = tensor_decompose(&t, &wedge_class_function(&t, l)?)?;
        if d.len() != 1 || d[0].1 != 1 {
            return Err(Error::Validation(format!(
                "exterior power {l} evaluated on the class words is not an irreducible row"
            )));
        }
    }
    assign_labels(&mut t)?;
    sort_irreps(&mut t)?;
    t.validate()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("cherednik-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let p = TableProvider::new(default_data_dir(), Some(dir.clone()));
        let t = p.table(CartanType::G2).unwrap();
        let file = dir.join(cache_file_name(CartanType::G2));
        assert!(file.exists());
        let q = TableProvider::new(default_data_dir(), Some(dir.clone()));
        let u = q.table(CartanType::G2).unwrap();
        assert_eq!(super::super::write_table(&t), super::super::write_table(&u));
        // a corrupted entry is discarded and recomputed
        std::fs::write(&file, "group G2 order 12\nclass 1 size 1 rep\n").unwrap();
        let r = TableProvider::new(default_data_dir(), Some(dir.clone()));
        assert_eq!(r.table(CartanType::G2).unwrap().num_classes(), 6);
        let _ = std::fs::remove_dir_all(&dir);
    }
}
