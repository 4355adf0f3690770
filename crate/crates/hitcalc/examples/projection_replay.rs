//! Push invariant classes through variable-killing projections
//! P_k -> P_(k-j) and re-reduce them downstairs — the mechanized form
//! of the hand arguments that compare quotients across arities.
//!
//! Run with: cargo run --example projection_replay

use hitcalc::algebra::text::parse_polynomial;
use hitcalc::invariants::replay_projection;
use hitcalc::{CohitSpace, GroupSpec};

fn main() -> hitcalc::Result<()> {
    // A single projected class: killing the last variable sends the
    // class of (7,2,1,1,0) onto the class of (7,2,1,1) downstairs.
    let p = parse_polynomial("(7,2,1,1,0)", 5)?;
    let image = p.project(&[4]);
    let c4 = CohitSpace::new(4, 11);
    println!("project (7,2,1,1,0) along x5 -> {image}");
    println!("  class downstairs is zero: {}\n", c4.is_hit(&image));

    // Replaying a whole invariant basis. At (5, 11) the GL_5 basis is
    // empty, so the replay reports itself vacuous.
    let gl5 = GroupSpec::general_linear(5);
    for kill in [vec![4usize], vec![3, 4]] {
        let replay = replay_projection(5, 11, &kill, &gl5);
        println!(
            "kill {:?}: invariant dim {} -> {}",
            replay.kill,
            replay.invariant_dim,
            if replay.vacuous {
                "vacuous"
            } else {
                "images below"
            }
        );
        for entry in &replay.entries {
            println!(
                "  {} |-> {} (class {})",
                entry.representative, entry.image, entry.image_class
            );
        }
    }

    // A nonempty case for contrast: the lone invariant of (2, 2).
    let replay = replay_projection(2, 2, &[1], &GroupSpec::general_linear(2));
    println!("\nkill {:?} at k=2 d=2:", replay.kill);
    for entry in &replay.entries {
        println!(
            "  {} |-> {} (class {}, zero: {})",
            entry.representative, entry.image, entry.image_class, entry.image_class_is_zero
        );
    }
    Ok(())
}
