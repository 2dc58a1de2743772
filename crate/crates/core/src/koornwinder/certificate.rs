use std::sync::Arc;

use crate::qkernel::{BlacklistFamily, GenericityCertificate, ParamSet};
use crate::scalar::ExactScalar;

use super::eigenvalue;

/// The denominators met by the one-column constructions at rank `n`.
///
/// Every denominator in the coefficient functions, the Bressoud matrices and
/// their relations has the form `1 - eps * mono * tau^k` for one of the
/// monomials below and a bounded shift `k`. The eigenvalue gaps used by the
/// triangular solve are added as explicit predicates.
pub fn blacklist<F: ExactScalar>(n: usize) -> GenericityCertificate<F> {
    let range = 12 * n as i64 + 16;
    let fams: [(&str, i8, [i32; 5]); 16] = [
        ("tau power", 1, [0, 0, 0, 0, 0]),
        ("minus tau power", -1, [0, 0, 0, 0, 0]),
        ("abcd", 1, [0, 1, 1, 1, 1]),
        ("c^2", 1, [0, 0, 0, 2, 0]),
        ("-c^2", -1, [0, 0, 0, 2, 0]),
        ("c^4", 1, [0, 0, 0, 4, 0]),
        ("a^2 c^2", 1, [0, 2, 0, 2, 0]),
        ("ac", 1, [0, 1, 0, 1, 0]),
        ("-ac", -1, [0, 1, 0, 1, 0]),
        ("-a^2 cd", -1, [0, 2, 0, 1, 1]),
        ("ab", 1, [0, 1, 1, 0, 0]),
        ("-d/c", -1, [0, 0, 0, -1, 1]),
        ("p", 1, [1, 0, 0, 0, 0]),
        ("-p", -1, [1, 0, 0, 0, 0]),
        ("q", 1, [2, 0, 0, 0, 0]),
        ("-q", -1, [2, 0, 0, 0, 0]),
    ];
    let mut cert = GenericityCertificate::new();
    for (label, sign, exps) in fams {
        cert = cert.family(BlacklistFamily::new(label, sign, exps, range));
    }
    for r in 0..=n {
        for j in 0..r {
            cert = cert.predicate(
                format!("eigenvalue gap d_{r} - d_{j} at rank {n}"),
                Arc::new(move |ps: &ParamSet<F>| Ok(eigenvalue(n, r, ps) - &eigenvalue(n, j, ps))),
            );
        }
    }
    cert
}
