#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use epr_frames::frames::direction_pairs;

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

/// Reads a golden file, first rewriting it from `oracle_text` when
/// `BLESS_GOLDENS=1`. The oracle text must always match the file.
pub fn golden(name: &str, oracle_text: &str) -> String {
    let path = golden_path(name);
    if std::env::var("BLESS_GOLDENS").as_deref() == Ok("1") {
        std::fs::write(&path, oracle_text).expect("write golden");
    }
    let committed = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden {}: {e} (run with BLESS_GOLDENS=1)", path.display()));
    assert_eq!(committed, oracle_text, "oracle disagrees with committed {name}");
    committed
}

/// Direction pairs as plain arrays.
pub fn pairs() -> Vec<([f64; 3], [f64; 3])> {
    direction_pairs().into_iter().map(|(a, b)| (a.components(), b.components())).collect()
}
