//! Tensor products of finite modules and flatness.
//!
//! `M ⊗_R N` is the free abelian group on symbols `[m, n]` modulo additivity
//! in each slot and the balancing relation `[r·m, n] = [m, r·n]`. It is killed
//! by `e = gcd(exp M, exp N)`, so the computation happens in `(ℤ/e)^{|M||N|}`.
//! Additivity is only imposed against additive generators and balancing only
//! against additive generators of `R`; the remaining relations follow.

use serde::Serialize;

use crate::abelian::{additive_generators, AbelianGroup, exponent, gcd, span, Cyclic, Order, ProductSubgroup};
use crate::module::FiniteModule;
use crate::ring::{FiniteRing, RingHom};

/// Order of `M ⊗_R N`.
pub fn tensor_order(m: &FiniteModule, n: &FiniteModule) -> Order {
    assert_eq!(m.ring(), n.ring(), "tensor factors must share a base ring");
    let e = gcd(exponent(m), exponent(n));
    if e == 1 {
        return Order::one();
    }
    let r = m.ring();
    let (sm, sn) = (m.size(), n.size());
    let slot = |a: usize, b: usize| a * sn + b;
    let group = Cyclic(e as u32);
    let mut rel = ProductSubgroup::new(&group, sm * sn);

    let gm: Vec<usize> = additive_generators(m, 0..sm as u32).into_iter().map(|x| x as usize).collect();
    let gn: Vec<usize> = additive_generators(n, 0..sn as u32).into_iter().map(|x| x as usize).collect();
    let gr: Vec<usize> = additive_generators(r, 0..r.size() as u32).into_iter().map(|x| x as usize).collect();

    let minus_one = e as u32 - 1;
    let mut emit = |terms: &[(usize, u32)]| {
        let mut v = rel.zero_vector();
        for &(s, c) in terms {
            v[s] = group.add(v[s], c);
        }
        rel.insert(v);
    };
    for a in 0..sm {
        for b in 0..sn {
            for &g in &gm {
                emit(&[(slot(m.addu(a, g), b), 1), (slot(a, b), minus_one), (slot(g, b), minus_one)]);
            }
            for &h in &gn {
                emit(&[(slot(a, n.addu(b, h)), 1), (slot(a, b), minus_one), (slot(a, h), minus_one)]);
            }
            for &s in &gr {
                emit(&[(slot(m.act(s, a), b), 1), (slot(a, n.act(s, b)), minus_one)]);
            }
        }
    }
    rel.slot_sizes()
        .into_iter()
        .fold(Order::one(), |acc, used| acc.mul(&Order::of(e / used as u64)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    pub ideal: Vec<usize>,
    pub tensor_order: String,
    pub image_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub flat: bool,
    pub faithfully_flat: bool,
    /// Ideals where `I ⊗ A → A` has a nonzero kernel.
    pub non_injective: Vec<IdealWitness>,
    /// Proper ideals with `R/I ⊗ A = 0`.
    pub killed_quotients: Vec<Vec<usize>>,
}

/// Size of `I·A`, the subgroup of `A` generated by `σ(i)·a`.
fn extended_ideal_order(sigma: &RingHom, ideal: &[usize]) -> usize {
    let a = &sigma.target;
    let products: Vec<u32> = ideal
        .iter()
        .flat_map(|&i| (0..a.size()).map(move |x| a.mul(sigma.apply(i), x) as u32))
        .collect();
    span(a, &products).len()
}

/// Flatness of `σ: R → A` by testing `I ⊗ A → A` on every ideal, and
/// faithfulness by testing `R/I ⊗ A ≠ 0` on every proper ideal.
pub fn flatness(sigma: &RingHom) -> FlatnessReport {
    let r = &sigma.source;
    let a_mod = FiniteModule::restrict(sigma);
    let mut non_injective = Vec::new();
    let mut killed_quotients = Vec::new();
    for ideal in r.all_ideals() {
        let i_mod = FiniteModule::from_ideal(r, &ideal);
        let t = tensor_order(&i_mod, &a_mod);
        let image = extended_ideal_order(sigma, ideal.members());
        if t != Order::of(image as u64) {
            non_injective.push(IdealWitness { ideal: ideal.members().to_vec(), tensor_order: t.to_string(), image_order: image });
        }
        if !ideal.contains(r.one()) {
            let q = FiniteModule::quotient_ring_module(r, &ideal);
            if tensor_order(&q, &a_mod).is_one() {
                killed_quotients.push(ideal.members().to_vec());
            }
        }
    }
    let flat = non_injective.is_empty();
    FlatnessReport { flat, faithfully_flat: flat && killed_quotients.is_empty(), non_injective, killed_quotients }
}

pub fn is_flat(sigma: &RingHom) -> bool {
    flatness(sigma).flat
}

pub fn is_faithfully_flat(sigma: &RingHom) -> bool {
    flatness(sigma).faithfully_flat
}

/// Convenience for the `A = R` case.
pub fn self_flatness(r: &FiniteRing) -> FlatnessReport {
    flatness(&RingHom::identity(r))
}
