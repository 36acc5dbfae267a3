use kmachine::harness::validate_all;

#[test]
fn verdicts_do_not_depend_on_the_seed() {
    let baseline = validate_all(1).unwrap().verdicts();
    for seed in 2..=5 {
        assert_eq!(validate_all(seed).unwrap().verdicts(), baseline, "seed {seed}");
    }
}

#[test]
fn csv_is_reproducible_in_process() {
    let a = validate_all(11).unwrap();
    let b = validate_all(11).unwrap();
    assert_eq!(a.csv(), b.csv());
    assert!(a.csv().starts_with("n,m,k,W,mode,algorithm,seed,T_C,M,B,Dprime,km_rounds,max_link_bits,max_machine_bits,success\n"));
}
