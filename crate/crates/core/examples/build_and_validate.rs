//! Build a small cover by hand, validate it, and check a transversal.

use transversal_lab::cover::{CoverBuilder, Side, Transversal};

fn main() {
    let mut b = CoverBuilder::new();
    let a = b.add_base(Side::A);
    let x = b.add_base(Side::B);
    let y = b.add_base(Side::B);
    let la = b.add_part(a, 2);
    let lx = b.add_part(x, 2);
    let ly = b.add_part(y, 2);
    b.add_base_edge(a, x);
    b.add_base_edge(a, y);
    b.add_cover_edge(la[0], lx[0]);
    b.add_cover_edge(la[1], lx[1]);
    b.add_cover_edge(la[0], ly[1]);

    let inst = b.build().expect("valid cover");
    println!("profile: {:?}", inst.degree_profile());

    let t = Transversal::new(vec![la[1], lx[0], ly[0]]);
    println!("{:?} independent: {}", t.choice, inst.is_independent_transversal(&t));
    let t = Transversal::new(vec![la[0], lx[0], ly[0]]);
    println!("{:?} -> {:?}", t.choice, inst.check_transversal(&t));

    // Two edges between the same pair of parts at one cover vertex break the matching axiom.
    let mut bad = inst.to_file();
    let (p, q) = (bad.cover_vertices[la[1]].id, bad.cover_vertices[lx[0]].id);
    bad.cover_edges.push([p, q]);
    match transversal_lab::cover::validate_cover(&bad) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {} ({e})", e.kind()),
    }
}
