//! End to end: split Z3 x Z9 by -4, take C0 over GF(16), extend it by gamma
//! and confirm the length-28 code is Hermitian self-dual, then round-trip it
//! through a matrix file.
//!
//!     cargo run --example self_dual_pipeline -- [group] [q]

use hsd_codes::cli::pipeline_selfdual;
use hsd_codes::codes::{is_hermitian_self_dual, weight_enumeration, GeneratorMatrix};
use hsd_codes::group::GroupShape;

fn main() -> hsd_codes::Result<()> {
    let mut args = std::env::args().skip(1);
    let group: GroupShape = args.next().as_deref().unwrap_or("3x9").parse()?;
    let q: u64 = args
        .next()
        .map_or(4, |a| a.parse().expect("q must be an integer"));

    let report = pipeline_selfdual(&group, q)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report.to_json()?).expect("json")
    );

    let text = report.extended.generator().to_matrix_file();
    let path = std::env::temp_dir().join(format!("hsd-{group}-{q}.txt"));
    std::fs::write(&path, &text).expect("write matrix file");
    let back =
        GeneratorMatrix::from_matrix_file(&std::fs::read_to_string(&path).expect("read back"))?;
    println!(
        "wrote {}; self-dual after reload: {}",
        path.display(),
        is_hermitian_self_dual(&back)?
    );

    match weight_enumeration(&back) {
        Ok(w) => println!("weight distribution: {w:?}"),
        Err(e) => println!("weight distribution skipped: {e}"),
    }
    Ok(())
}
