use coset_growth::catalog::standard;
use coset_growth::product_free::{is_product_free, max_product_free};
use coset_growth::Rational;
use std::time::Instant;

#[test]
fn exact_maxima_up_to_32() {
    for e in standard(32) {
        let t = Instant::now();
        let r = max_product_free(&e.group);
        println!("{}\t{}\t{}\t{:?}", e.name, r.size, r.alpha, t.elapsed());
        assert!(r.optimal, "{}", e.name);
        assert!(is_product_free(&e.group, &r.set));
        if e.group.is_abelian() && e.group.order() > 1 {
            assert!(r.alpha >= Rational::new(2, 7), "{}", e.name);
        }
    }
}
