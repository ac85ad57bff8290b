use reaq_core::rea::{verify_identity, ReaContext, ReaIdentity};
use std::time::Instant;

fn main() {
    let ctx = ReaContext::new(3);
    for id in [
        ReaIdentity::Centrality,
        ReaIdentity::QdetSigma,
        ReaIdentity::LaplaceAgreement,
        ReaIdentity::LaplaceStarLink,
        ReaIdentity::GeneralComm,
        ReaIdentity::Muir1,
        ReaIdentity::Muir2,
    ] {
        let t = Instant::now();
        let rep = verify_identity(&ctx, id, 42).unwrap();
        println!(
            "{:?}: pass={} instances={} ({:.2?})",
            id, rep.pass, rep.instances, t.elapsed()
        );
        if !rep.pass {
            println!("  witness: {:?}", rep.witness);
        }
    }
}
