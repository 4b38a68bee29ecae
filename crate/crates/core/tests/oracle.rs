mod common;

use symdist::{
    brute_force_distance, compute, random_stabilizer, Algorithm, BitMatrix, BitVector, ComputeOptions,
    StabilizerInstance,
};

use common::oracle_distance;

#[test]
fn algorithms_match_independent_oracle() {
    let opts = ComputeOptions::default();
    for seed in 0..120u64 {
        let n = 2 + (seed % 7) as usize;
        let k = ((seed / 7) % (n as u64 + 1)) as usize;
        let inst = random_stabilizer(n, k, seed).unwrap();
        let expected = oracle_distance(inst.matrix(), true).unwrap();
        for alg in Algorithm::ALL {
            let r = compute(&inst, Some(alg), &opts).unwrap();
            assert_eq!(r.distance, expected, "{alg} on n={n} k={k} seed={seed}");
        }
    }
}

#[test]
fn unfiltered_runs_give_rowspace_minimum() {
    let opts = ComputeOptions {
        dual_filter: false,
        ..ComputeOptions::default()
    };
    for seed in 0..40u64 {
        let n = 3 + (seed % 5) as usize;
        let inst = random_stabilizer(n, 1 + (seed % 2) as usize, seed).unwrap();
        let expected = oracle_distance(inst.matrix(), false).unwrap();
        for alg in Algorithm::ALL {
            assert_eq!(compute(&inst, Some(alg), &opts).unwrap().distance, expected, "{alg}");
        }
    }
}

#[test]
fn reports_are_consistent() {
    let opts = ComputeOptions {
        trace: true,
        workers: 2,
        ..ComputeOptions::default()
    };
    for seed in 0..30u64 {
        let inst = random_stabilizer(9, (seed % 10) as usize, seed).unwrap();
        for alg in [Algorithm::Saved1Gamma, Algorithm::Saved2Gamma, Algorithm::SavedIsometry] {
            let r = compute(&inst, Some(alg), &opts).unwrap();
            assert_eq!((r.n, r.k, r.workers), (9, inst.k(), 2));
            let trace = r.bounds_trace.as_ref().unwrap();
            assert!(trace.windows(2).all(|w| w[0].lower <= w[1].lower && w[0].upper >= w[1].upper));
            let last = trace.last().unwrap();
            assert_eq!(last.upper, r.distance);
            assert_eq!(last.g, r.generations);
            assert!(r.exhausted || last.lower >= last.upper);
            let cw = r.codeword.as_ref().unwrap();
            let v: BitVector = cw.parse().unwrap();
            assert_eq!(symdist::gf2::symplectic_weight(&v).unwrap(), r.distance);
        }
    }
}

#[test]
fn self_dual_codes_need_no_filter() {
    for seed in 0..20u64 {
        let inst = random_stabilizer(6, 0, seed).unwrap();
        let on = compute(&inst, None, &ComputeOptions::default()).unwrap();
        let off = compute(
            &inst,
            None,
            &ComputeOptions {
                dual_filter: false,
                ..ComputeOptions::default()
            },
        )
        .unwrap();
        assert_eq!(on.distance, off.distance);
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    let dup = StabilizerInstance::new(BitMatrix::parse_rows(&["10|01", "10|01", "00|11"]).unwrap()).unwrap();
    for alg in Algorithm::ALL {
        let e = compute(&dup, Some(alg), &ComputeOptions::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2, "{alg}: {e}");
    }
    let not_closed = StabilizerInstance::new(BitMatrix::parse_rows(&["10|00", "00|10"]).unwrap()).unwrap();
    assert_eq!(
        brute_force_distance(&not_closed, &ComputeOptions::default()).unwrap_err().exit_code(),
        2
    );
    let zero_workers = ComputeOptions {
        workers: 0,
        ..ComputeOptions::default()
    };
    let ok = random_stabilizer(4, 1, 0).unwrap();
    assert_eq!(compute(&ok, None, &zero_workers).unwrap_err().exit_code(), 1);
}

#[test]
fn algorithms_agree_beyond_the_oracle() {
    let opts = ComputeOptions {
        workers: 2,
        ..ComputeOptions::default()
    };
    for seed in 0..24u64 {
        let n = 14 + (seed % 12) as usize;
        let k = (seed % 5) as usize;
        let inst = random_stabilizer(n, k, 7000 + seed).unwrap();
        let ds: Vec<usize> = [Algorithm::Saved1Gamma, Algorithm::Saved2Gamma, Algorithm::SavedIsometry]
            .iter()
            .map(|&alg| compute(&inst, Some(alg), &opts).unwrap().distance)
            .collect();
        assert!(ds.iter().all(|&d| d == ds[0]), "n={n} k={k}: {ds:?}");
        if n + k <= 22 {
            assert_eq!(brute_force_distance(&inst, &opts).unwrap().distance, ds[0]);
        }
    }
}
