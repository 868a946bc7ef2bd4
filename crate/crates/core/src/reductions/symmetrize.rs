//! Oriented to symmetric instances by adding zero-cost opposite arcs.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{Arc, Instance, Kind};
use crate::rational::Rational;

/// Adds the reverse of every arc with cost 0 and the same matrix. Partition
/// weights are unchanged for every partition.
pub fn mwop_to_mwsdp(instance: &Instance) -> Result<Instance> {
    if instance.kind() != Kind::Oriented {
        let (tail, head) = instance
            .arcs()
            .first()
            .map(|a| {
                let v = instance.vertices();
                (v[a.tail].clone(), v[a.head].clone())
            })
            .unwrap_or_default();
        return Err(Error::KindViolation {
            tail,
            head,
            kind: Kind::Oriented.name(),
            reason: "symmetrization takes an oriented instance",
        });
    }
    let mut arcs = Vec::with_capacity(2 * instance.arcs().len());
    for a in instance.arcs() {
        arcs.push(a.clone());
        arcs.push(Arc {
            tail: a.head,
            head: a.tail,
            cost: Rational::zero(),
            matrix: a.matrix,
        });
    }
    Instance::from_parts(
        Kind::Symmetric,
        instance.vertices().to_vec(),
        instance.family().clone(),
        arcs,
    )
}
