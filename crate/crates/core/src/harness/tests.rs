use super::*;
use crate::group::build_group;

#[test]
fn config_text_overrides_defaults() {
    let text = "# caps\natom-cap = 30\norder-cap=40 # inline\naut-node-budget = 5000\nnode-budget = none\njobs = 3\nout = /tmp/x\nformats = json\n";
    let c = RunConfig::default().merge_text(text).unwrap();
    assert_eq!(c.atom_cap, 30);
    assert_eq!(c.order_cap, 40);
    assert_eq!(c.aut_cap, DEFAULT_AUT_CAP);
    assert_eq!(c.aut_node_budget, Some(5000));
    assert_eq!(c.node_budget, None);
    assert_eq!(c.jobs, 3);
    assert_eq!(c.out_dir, PathBuf::from("/tmp/x"));
    assert_eq!(c.formats, vec![Format::Json]);
    c.validate().unwrap();
    assert_eq!(c.to_map()["aut-node-budget"], "5000");
}

#[test]
fn config_rejects_bad_input() {
    for bad in ["atom-cap", "atom-cap = many", "colour = red", "formats = xml", "jobs = -1"] {
        assert!(matches!(RunConfig::default().merge_text(bad), Err(Error::Parse(_))), "{bad}");
    }
    let zero = RunConfig::default().merge_text("aut-cap = 0").unwrap();
    assert!(zero.validate().is_err());
    let zero_budget = RunConfig::default().merge_text("node-budget = 0").unwrap();
    assert!(zero_budget.validate().is_err());
}

#[test]
fn at_least_only_raises() {
    let c = RunConfig::default().merge_text("atom-cap = 50").unwrap();
    let r = c.at_least(24, 100, 10);
    assert_eq!((r.atom_cap, r.order_cap, r.aut_cap), (50, 100, DEFAULT_AUT_CAP));
}

#[test]
fn out_dir_is_created() {
    let dir = tempfile::tempdir().unwrap();
    let c = RunConfig { out_dir: dir.path().join("a/b"), ..Default::default() };
    assert!(c.prepare_out_dir().unwrap().is_dir());
}

fn report(outcomes: &[Outcome]) -> RecipeReport {
    RecipeReport {
        recipe: "r".into(),
        version: VERSION.into(),
        config: RunConfig::default().to_map(),
        checks: outcomes
            .iter()
            .map(|&outcome| Check { name: "c".into(), outcome, detail: String::new(), seconds: 0.0 })
            .collect(),
        wall_seconds: 0.0,
    }
}

#[test]
fn exit_codes() {
    assert_eq!(report(&[Outcome::Pass, Outcome::Pass]).exit_code(), EXIT_PASS);
    assert_eq!(report(&[Outcome::Pass, Outcome::Undecided]).exit_code(), EXIT_UNDECIDED);
    assert_eq!(report(&[Outcome::Undecided, Outcome::Fail]).exit_code(), EXIT_FAIL);
    assert_eq!(report(&[]).exit_code(), EXIT_PASS);
}

#[test]
fn check_classifies_errors() {
    let cap = Check::run("cap", || Err(Error::CapExceeded { what: "x", size: 2, cap: 1 }));
    assert_eq!(cap.outcome, Outcome::Undecided);
    let budget = Check::run("budget", || Err(Error::BudgetExhausted(3)));
    assert_eq!(budget.outcome, Outcome::Undecided);
    let other = Check::run("other", || Err(Error::NotNormal));
    assert_eq!(other.outcome, Outcome::Fail);
}

#[test]
fn reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let r = report(&[Outcome::Pass, Outcome::Fail]);
    r.write_json(&dir.path().join("r.json")).unwrap();
    r.write_csv(&dir.path().join("r.csv")).unwrap();
    let back: RecipeReport = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(back.exit_code(), EXIT_FAIL);
    let csv = fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn unknown_recipe_is_an_error() {
    assert!(run_recipe("thm9", &RunConfig::default()).is_err());
}

#[test]
fn group_info_examples() {
    let a5 = Arc::new(build_group("A5").unwrap());
    let info = group_info(&a5).unwrap();
    assert_eq!(info.class_sizes, vec![1, 12, 12, 15, 20]);
    assert!(info.camina_kernels.is_empty());
    assert_eq!(info.maximal_cyclic, None);

    let d12 = Arc::new(build_group("dihedral:12").unwrap());
    let outside = group_info(&d12).unwrap().outside_classes.unwrap();
    assert_eq!(outside.len(), 2);
    assert!(outside.iter().all(|c| c.size == 3));

    let q16 = Arc::new(build_group("quaternion:16").unwrap());
    let info = group_info(&q16).unwrap();
    assert_eq!(info.maximal_cyclic, Some(true));
    assert_eq!(info.frattini_order, 4);

    let s3 = Arc::new(build_group("dihedral:6").unwrap());
    assert_eq!(group_info(&s3).unwrap().camina_kernels.len(), 1);
}

#[test]
fn coprime_predicate_scope() {
    use crate::sring::SRing;
    let c5 = Arc::new(build_group("cyclic:5").unwrap());
    // thin rings have no basic set above size 1
    assert_eq!(recipes::coprime_predicate(&SRing::full(&c5)).unwrap(), None);
    assert_eq!(recipes::coprime_predicate(&SRing::trivial(&c5)).unwrap(), Some(true));
    let c6 = Arc::new(build_group("cyclic:6").unwrap());
    assert_eq!(recipes::coprime_predicate(&SRing::center_sring(&c6)).unwrap(), None);
}
