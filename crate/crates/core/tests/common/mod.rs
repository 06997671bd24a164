//! Golden drawings shared by the golden and acceptance tests.

#![allow(dead_code)]

use std::path::PathBuf;

use meandre::render::{to_ascii, to_dot, to_json, GraphDocument};
use meandre::{Composition, SeaweedA, SeaweedC};

pub struct Case {
    pub name: &'static str,
    /// `None` for type A.
    pub rank: Option<usize>,
    pub top: &'static str,
    pub bottom: &'static str,
}

const fn c(name: &'static str, rank: usize, top: &'static str, bottom: &'static str) -> Case {
    Case {
        name,
        rank: Some(rank),
        top,
        bottom,
    }
}

pub const CASES: &[Case] = &[
    c("c7_parabolic", 7, "2,3", ""),
    c("c10_chain_0", 10, "3,3", "4,5"),
    c("c10_chain_1", 7, "3", "1,5"),
    c("c10_chain_2", 6, "1,1", "5"),
    c("c10_chain_3", 5, "1", "3,1"),
    c("c10_chain_4", 4, "", "1,1,1"),
    c("c8_index_one", 8, "3,4", "5,3"),
    c("c7_frobenius_k1", 7, "2,4", "4,3"),
    c("c7_frobenius_k2", 7, "3,2", "2,5"),
    Case {
        name: "type_a_example",
        rank: None,
        top: "5,2,2",
        bottom: "2,4,3",
    },
];

fn comp(text: &str) -> Composition {
    text.parse().expect("valid composition")
}

pub fn document(case: &Case) -> GraphDocument {
    match case.rank {
        Some(n) => GraphDocument::for_c(&SeaweedC::sp(n, comp(case.top), comp(case.bottom)).unwrap()),
        None => GraphDocument::for_a(&SeaweedA::new(comp(case.top), comp(case.bottom)).unwrap()),
    }
}

/// `(file name, rendered contents)` for every golden file of `case`.
pub fn render(case: &Case) -> Vec<(String, String)> {
    let doc = document(case);
    vec![
        (format!("{}.txt", case.name), to_ascii(&doc).expect("drawing fits")),
        (format!("{}.dot", case.name), to_dot(&doc)),
        (format!("{}.json", case.name), to_json(&doc)),
    ]
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Compares every rendering with its golden file and returns the mismatches.
/// With `MEANDRE_UPDATE_GOLDEN=1` the files are rewritten instead.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var("MEANDRE_UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    let dir = golden_dir();
    let mut problems = Vec::new();
    for case in CASES {
        for (file, rendered) in render(case) {
            let path = dir.join(&file);
            if update {
                std::fs::create_dir_all(&dir).unwrap();
                std::fs::write(&path, &rendered).unwrap();
                continue;
            }
            match std::fs::read_to_string(&path) {
                Ok(stored) if stored == rendered => {}
                Ok(_) => problems.push(format!("{file} differs from the stored golden")),
                Err(e) => problems.push(format!("{file}: {e}")),
            }
            if render(case).iter().any(|(f, again)| *f == file && *again != rendered) {
                problems.push(format!("{file} is not stable across renderings"));
            }
        }
    }
    problems
}
