use balanced_rs::balanced::{
    self, lemma1_independence_check, transform_matrix, verify_balanced_columns, verify_rank,
    verify_sparsest, verify_support_match,
};
use balanced_rs::mask::{self, MaskMatrix, MaskParams, SelectorVector};
use balanced_rs::rscode::min_distance_oracle;
use balanced_rs::{
    CodeProfile, ConstructionError, DecoderKind, Field, GeneratorSet, Gf, MatrixFile,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn gf7() -> Gf {
    Gf::builder(7, 1).alpha(3).build().unwrap()
}

fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&q| balanced_rs::gf::prime_power(q).is_some())
        .collect()
}

#[test]
fn golden_masks_match() {
    for (k, circ, sel) in [
        (3, "circulant_n6_k3.txt", "selected_n6_k3.txt"),
        (4, "circulant_n6_k4.txt", "selected_n6_k4.txt"),
    ] {
        let params = MaskParams::new(6, k).unwrap();
        let a = MaskMatrix::circulant(&params);
        assert_eq!(a, MaskMatrix::from_ascii(&fixture(circ)).unwrap());
        assert_eq!(a.to_ascii(), fixture(circ));
        let v = SelectorVector::solve(&params);
        let chosen = MaskMatrix::stack(&mask::select_masks(&v, &params).unwrap());
        assert_eq!(chosen.to_ascii(), fixture(sel));
    }
}

#[test]
fn golden_generator_file_matches() {
    let doc: MatrixFile = serde_json::from_str(&fixture("gf7_n6_k4.json")).unwrap();
    let built = GeneratorSet::build(CodeProfile::new(gf7(), 4).unwrap()).unwrap();
    assert_eq!(MatrixFile::from_set(&built), doc);
    let loaded = doc.to_set().unwrap();
    assert!(loaded.report().passed());
}

#[test]
fn every_admissible_profile_up_to_64_verifies() {
    for q in prime_powers_up_to(64) {
        let field = Gf::with_order(q).unwrap();
        let n = (q - 1) as usize;
        for k in mask::admissible_dimensions(n) {
            let set = GeneratorSet::build(CodeProfile::new(field.clone(), k).unwrap())
                .unwrap_or_else(|e| panic!("q={q} k={k}: {e}"));
            let g = set.generator();
            assert!(verify_sparsest(g), "q={q} k={k}");
            assert!(verify_balanced_columns(g), "q={q} k={k}");
            assert_eq!(verify_rank(g), k);
            assert!(verify_support_match(g, set.masks()));
            for row in g.row_iter() {
                assert!(set.code().is_codeword(row));
            }
            assert!(balanced::base_polynomial(set.profile())
                .coeffs()
                .iter()
                .all(|&c| !field.is_zero(c)));
        }
    }
}

#[test]
fn inadmissible_profiles_never_build() {
    for q in prime_powers_up_to(64) {
        let field = Gf::with_order(q).unwrap();
        let n = (q - 1) as usize;
        for k in (1..=n).filter(|&k| !mask::is_admissible(n, k)) {
            let err = GeneratorSet::build(CodeProfile::new(field.clone(), k).unwrap()).unwrap_err();
            assert!(matches!(err, ConstructionError::Mask(_)), "q={q} k={k}");
        }
    }
}

#[test]
fn random_distinct_shifts_give_nonsingular_transform() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let field = Gf::prime(17).unwrap();
    for trial in 0..200 {
        let k = rng.gen_range(1..=16);
        let profile = CodeProfile::new(field.clone(), k).unwrap();
        let shifts: Vec<usize> = sample(&mut rng, 16, k).into_vec();
        assert!(
            lemma1_independence_check(&profile, &shifts).unwrap(),
            "trial {trial}: {shifts:?}"
        );
        if k >= 2 {
            // duplicate one shift modulo n: P loses rank
            let mut dup = shifts.clone();
            dup[1] = dup[0] + 16;
            assert_eq!(transform_matrix(&profile, &dup).rank(), k - 1);
            assert!(matches!(
                lemma1_independence_check(&profile, &dup),
                Err(ConstructionError::DuplicateShift(_))
            ));
        }
    }
}

#[test]
fn consecutive_shifts_are_independent() {
    for q in [7u64, 11, 16, 25, 32] {
        let field = Gf::with_order(q).unwrap();
        for k in 1..q as usize {
            let profile = CodeProfile::new(field.clone(), k).unwrap();
            let shifts: Vec<usize> = (0..k).collect();
            assert!(lemma1_independence_check(&profile, &shifts).unwrap());
        }
    }
}

#[test]
fn balanced_span_has_full_minimum_distance() {
    for (field, k) in [(gf7(), 3), (gf7(), 4), (Gf::prime(11).unwrap(), 5)] {
        let set = GeneratorSet::build(CodeProfile::new(field, k).unwrap()).unwrap();
        assert_eq!(
            min_distance_oracle(set.generator()).unwrap(),
            set.params().d
        );
    }
}

#[test]
fn balanced_code_round_trips_under_correctable_errors() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (q, k) in [(7u64, 4usize), (11, 5), (16, 6), (13, 4), (64, 28)] {
        let field = Gf::with_order(q).unwrap();
        let set = GeneratorSet::build(CodeProfile::new(field.clone(), k).unwrap()).unwrap();
        let n = set.profile().n();
        let t = set.profile().correctable();
        for _ in 0..200 {
            let u: Vec<_> = (0..k)
                .map(|_| field.element(rng.gen_range(0..q)).unwrap())
                .collect();
            let mut r = set.encode(&u).unwrap();
            let weight = rng.gen_range(0..=t);
            for j in sample(&mut rng, n, weight) {
                let delta = field.element(rng.gen_range(1..q)).unwrap();
                r[j] = field.add(r[j], delta);
            }
            assert_eq!(set.decode(&r, DecoderKind::Syndrome).unwrap(), u);
            assert_eq!(set.decode(&r, DecoderKind::Gao).unwrap(), u);
        }
    }
}

#[test]
fn erasure_decoding_through_balanced_generator() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let field = Gf::with_order(16).unwrap();
    let set = GeneratorSet::build(CodeProfile::new(field.clone(), 6).unwrap()).unwrap();
    for _ in 0..100 {
        let u: Vec<_> = (0..6)
            .map(|_| field.element(rng.gen_range(0..16)).unwrap())
            .collect();
        let c = set.encode(&u).unwrap();
        let mut rx: Vec<_> = c.into_iter().map(Some).collect();
        for j in sample(&mut rng, 15, 9) {
            rx[j] = None;
        }
        assert_eq!(set.decode_erasures(&rx).unwrap(), u);
    }
}
