mod common;

use common::{instance, Formula};
use survnet::montecarlo::SimConfig;

#[test]
fn closed_forms_match_simulation() {
    let cfg = SimConfig::new(40_000, 11);
    for f in Formula::ALL {
        for seed in 0..4 {
            let inst = instance(f, seed);
            let est = inst.simulate(&cfg);
            let z = (est.mean - inst.closed).abs() / est.stderr.max(1e-12);
            assert!(
                z < 4.0,
                "{} seed {seed}: closed {} vs simulated {} ± {}",
                f.name(),
                inst.closed,
                est.mean,
                est.stderr
            );
        }
    }
}
