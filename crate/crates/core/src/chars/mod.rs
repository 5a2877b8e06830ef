//! Character tables of Weyl groups and the invariants derived from them.

pub mod bn;
pub mod classical;
pub mod dixon;
pub mod invariants;
pub mod io;
pub mod labels;
pub mod provider;
pub mod sn;
pub mod table;

pub use bn::{bn_character, d_class_sign, dn_character, BnCharacters, SignedCycleType};
pub use classical::classical_table;
pub use dixon::compute_table;
pub use invariants::{
    b_invariants, decompose_with_wedge, degrees, fake_degrees, n_invariant, tensor_decompose, wedge_class_function,
    wedge_total, NForm,
};
pub use io::{load_table, parse_table, parse_table_unchecked, save_table, write_table};
pub use labels::{assign_labels, phi_names, sort_irreps};
pub use provider::{
    cache_file_name, computed_table, data_file_name, default_data_dir, import_raw, TableProvider, DATA_DIR_ENV,
    ENGINE_VERSION,
};
pub use sn::{remove_rim_hooks, sn_character, sn_class_size, SnCharacters};
pub use table::{canonical_d, normalize_label, CharacterTable, ClassFunction, Irrep, IrrepLabel};
