use std::process::Command;

use mahonian_cli::{run, Output, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED};

fn mahonian(args: &[&str]) -> Output {
    run(std::iter::once("mahonian").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = mahonian(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn stats_json_matches_the_worked_example() {
    assert_eq!(
        ok(&["stats", "342421", "--format", "json"]),
        "{\"adj\":1,\"des\":3,\"ides\":2,\"F\":3,\"MAJ\":11,\"STAT\":7}\n"
    );
    assert_eq!(
        ok(&["stats", "342421"]),
        "adj=1 des=3 ides=2 F=3 MAJ=11 STAT=7\n"
    );
    assert_eq!(
        ok(&["--format", "csv", "stats", "321414"]),
        "word,adj,des,ides,F,MAJ,STAT\n321414,1,3,2,3,7,11\n"
    );
}

#[test]
fn bijection_outputs() {
    assert_eq!(ok(&["bijection", "342421"]), "321414\n");
    assert_eq!(ok(&["bijection", "321414"]), "342421\n");
    let image = ok(&["bijection", "3,12,7,12,5"]);
    assert_eq!(image, "3,12,5,7,5\n");
    assert_eq!(ok(&["bijection", image.trim()]), "3,12,7,12,5\n");
    let traced = ok(&["bijection", "342421", "--trace"]);
    assert!(traced.contains("T              2,1,1,2\n"), "{traced}");
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["bijection", "342421", "--trace", "--format", "json"])).unwrap();
    assert_eq!(json["sigma"], "431526");
    assert_eq!(json["output"], "321414");
}

#[test]
fn perm_bijection_outputs() {
    assert_eq!(ok(&["perm-bijection", "452631"]), "431526\n");
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["perm-bijection", "452631", "--format", "json"])).unwrap();
    assert_eq!(json["complement"], "462513");
    let out = mahonian(&["perm-bijection", "4526"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn count_outputs() {
    assert_eq!(ok(&["count", "1-2-3-1", "6214562"]), "3\n");
    assert_eq!(ok(&["count", "2-13", "425163"]), "4\n");
    assert_eq!(ok(&["count", "[2-13", "425163"]), "2\n");
    assert_eq!(
        ok(&["count", "[2-13", "425163", "--list"]),
        "2\n[2-13 at 1,2,3: 425\n[2-13 at 1,4,5: 416\n"
    );
    assert_eq!(
        ok(&["count", "21-3 + 21-2 + 13-2 + 12-1 + 32-1 + 21", "342421"]),
        "7\n"
    );
    assert_eq!(
        ok(&["count", "21", "3421", "--list", "--format", "csv"]),
        "pattern,positions,letters\n21,\"2,3\",42\n21,\"3,4\",21\n"
    );
}

#[test]
fn partitions_output() {
    let text = ok(&["partitions", "342421"]);
    assert!(text.contains("exp        452631\n"));
    assert!(text.contains("wpart      1,2,1,2\n"));
    assert!(text.contains("ppart      1,2,3\n"));
}

#[test]
fn distribution_outputs() {
    let text = ok(&[
        "distribution",
        "--universe",
        "perms",
        "--n",
        "4",
        "--stat",
        "MAJ",
    ]);
    assert_eq!(
        text,
        "# S_4, 24 elements\nMAJ count\n0 1\n1 3\n2 5\n3 6\n4 5\n5 3\n6 1\n"
    );
    assert_eq!(
        ok(&[
            "distribution",
            "--universe",
            "perms",
            "--n",
            "4",
            "--stat",
            "STAT"
        ])
        .replace("STAT", "MAJ"),
        text
    );
    let csv = ok(&[
        "distribution",
        "--universe",
        "class",
        "--class",
        "2112",
        "--stat",
        "MAJ,STAT",
        "--format",
        "csv",
    ]);
    assert!(csv.starts_with("MAJ,STAT,count\n"));
    let total: u64 = csv
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 6);
    let json: serde_json::Value = serde_json::from_str(&ok(&[
        "distribution",
        "--universe",
        "dense",
        "--q",
        "2",
        "--n",
        "3",
        "--stat",
        "des",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["total"], 6);
    assert_eq!(json["universe"]["kind"], "dense_words");
}

#[test]
fn verify_passes() {
    for args in [
        &["verify", "involution"][..],
        &["verify", "transport", "--q", "3", "--n", "1..5"],
        &["verify", "mahonian", "--n", "6"],
        &["verify", "mahonian", "--q", "2", "--n", "2..7"],
        &["verify", "classes", "--q", "2", "--n", "5"],
    ] {
        let text = ok(args);
        assert!(
            text.lines().all(|l| l.starts_with("PASS ")),
            "{args:?}: {text}"
        );
    }
}

#[test]
fn verify_extensions_finds_the_unique_survivor() {
    let text = ok(&["verify", "extensions"]);
    assert_eq!(
        text,
        "PASS [3]^4..6 (1053 elements): 32 extensions of 13-2 + 21 + 21-3 + 32-1, \
         survivors equidistributed with MAJ: [12-1 + 13-2 + 21 + 21-2 + 21-3 + 32-1]\n"
    );
}

#[test]
fn inconclusive_extension_search_fails() {
    let out = mahonian(&["verify", "extensions", "--n", "1..2"]);
    assert_eq!(out.code, EXIT_VERIFICATION_FAILED, "{}", out.stdout);
    assert!(out.stdout.starts_with("FAIL "));
}

#[test]
fn usage_errors_exit_2_with_positions() {
    let out = mahonian(&["stats", "34x2"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("position 3"), "{}", out.stderr);
    let out = mahonian(&["count", "1-2-", "123"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("position 5"), "{}", out.stderr);
    for args in [
        &["frobnicate"][..],
        &["stats"],
        &["verify", "involution", "--n", "5..2"],
        &[
            "distribution",
            "--universe",
            "words",
            "--n",
            "3",
            "--stat",
            "MAJ",
        ],
        &[
            "distribution",
            "--universe",
            "perms",
            "--n",
            "3",
            "--stat",
            "nope",
        ],
        &["verify", "involution", "--n", "12"],
        &["stats", "342421", "--format", "xml"],
    ] {
        assert_eq!(mahonian(args).code, EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn max_elements_flag_caps_enumeration() {
    let out = mahonian(&["--max-elements", "100", "verify", "involution", "--n", "5"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("above the cap of 100"));
    ok(&["--max-elements", "120", "verify", "involution", "--n", "5"]);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "verify", "classes", "--q", "3", "--n", "1..5", "--format", "json",
    ];
    assert_eq!(mahonian(&args), mahonian(&args));
}

#[test]
fn binary_exit_codes_and_environment_cap() {
    let bin = env!("CARGO_BIN_EXE_mahonian");
    let out = Command::new(bin)
        .args(["bijection", "342421"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "321414\n");

    let out = Command::new(bin)
        .args(["verify", "involution", "--n", "4"])
        .env("MAHONIAN_MAX_ELEMENTS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(bin)
        .args(["verify", "extensions", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
