//! Parameters used by the benchmarks.

use arthur_core::number::GaussRat;
use arthur_core::{ArthurParameter, GroupDescriptor, Summand};

/// V(0,2n) + V(0,2n-2) + ... + V(0,2) + W(0,n mod 2) on Sp(2n).
pub fn sp_discrete(n: u32) -> ArthurParameter {
    let z = GaussRat::zero();
    let mut s: Vec<Summand> = (0..n).map(|r| Summand::v(z, 2 * (n - r) as i64, 1)).collect();
    s.push(Summand::w(z, (n % 2) as u8, 1));
    ArthurParameter::new(GroupDescriptor::sp(n), s)
}

/// Blocks V(0,t)⊠R[2] spaced so the parameter stays regular, on the quasi-split SO_{2n+1}.
pub fn so_odd_arthur(blocks: u32) -> ArthurParameter {
    let z = GaussRat::zero();
    let n = 2 * blocks;
    let s = (0..blocks).map(|r| Summand::v(z, (4 * (blocks - r)) as i64, 2)).collect();
    let g = if n.is_multiple_of(2) { GroupDescriptor::so(n + 1, n) } else { GroupDescriptor::so(n, n + 1) };
    ArthurParameter::new(g.expect("valid signature"), s)
}
