mod common;

#[test]
fn figure_goldens_match() {
    let problems = common::check_goldens();
    assert!(problems.is_empty(), "{problems:#?}");
}
