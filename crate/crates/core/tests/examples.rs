use std::process::Command;

fn run_example(name: &str) -> String {
    let out = Command::new(env!("CARGO"))
        .args(["run", "-q", "--example", name])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("spawn cargo");
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn examples_run() {
    let tables = run_example("character_tables");
    assert!(tables.contains("T_12 (6 classes)"));
    let census = run_example("brauer_census");
    assert!(census.lines().skip(1).all(|l| {
        let cols: Vec<&str> = l.split_whitespace().collect();
        cols[4] == cols[5]
    }));
    assert!(run_example("orbit_census").contains("36 tuples, 5 orbits"));
    assert!(run_example("gram_matrix").contains("12 translates"));
    let obasis = run_example("obasis_search");
    assert!(obasis.contains("n=2 chi:1  dim  16  o-basis true"));
    assert!(obasis.contains("n=3 chi:1  dim  24  o-basis false"));
    assert!(run_example("tensor_classes").contains("sum to 256"));
    assert!(run_example("verify_theorems").contains(", 0 disagreements"));
}
