//! Builds the lower-bound gadget families from random bit strings and shows
//! the answer each instance encodes.

use kmachine::graph::{generate_gadget, random_gadget, GadgetKind};
use kmachine::oracles;

fn main() {
    for kind in [GadgetKind::StLower, GadgetKind::StVerify, GadgetKind::Conn] {
        for seed in 0..3 {
            let spec = random_gadget(kind, 8, seed);
            let g = generate_gadget(&spec).expect("gadget");
            let bits = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
            println!(
                "{kind:?} seed={seed} x={} y={} n={} m={} components={} predicted={}",
                bits(&spec.x),
                bits(&spec.y),
                g.n(),
                g.m(),
                oracles::component_count(&g),
                spec.predicted()
            );
        }
    }
}
