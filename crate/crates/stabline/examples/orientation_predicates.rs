//! The exact orientation form: sign gives turn direction, zero gives
//! collinearity, and the value is invariant under translations and
//! exact rational rotations.

use stabline::exact_geometry::{
    integer, orientation, phi, rational, rotate, translate, Point, RationalRotation,
};

fn main() {
    let a = Point::from_integers(0, 0);
    let b = Point::from_integers(2, 0);
    let c = Point::from_integers(1, 3);
    println!("phi({a}, {b}, {c}) = {}", phi(&a, &b, &c));
    println!("orientation: {:?}", orientation(&a, &b, &c));

    let mid = Point::new(integer(4), integer(8));
    println!(
        "orientation((1,7), (7,9), {mid}): {:?}",
        orientation(
            &Point::from_integers(1, 7),
            &Point::from_integers(7, 9),
            &mid
        )
    );

    // Rigid motions never change the value.
    let v = (rational(7, 3), integer(-5));
    let moved = phi(&translate(&a, &v), &translate(&b, &v), &translate(&c, &v));
    println!("after translation by (7/3, -5): {moved}");

    let rot = RationalRotation::new(rational(3, 5), rational(4, 5)).unwrap();
    let turned = phi(&rotate(&a, &rot), &rotate(&b, &rot), &rotate(&c, &rot));
    println!("after the (3/5, 4/5) rotation:  {turned}");
}
