//! Data-parallel helpers with a sequential fallback.

/// Maps every item and folds the results with an associative `reduce`.
/// `jobs = Some(1)` always runs on the calling thread.
#[cfg(feature = "parallel")]
pub(crate) fn map_reduce<T, R, M, I, F>(jobs: Option<usize>, items: &[T], map: M, identity: I, reduce: F) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let run = || items.par_iter().map(&map).reduce(&identity, &reduce);
    match jobs {
        Some(1) => sequential(items, &map, &identity, &reduce),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_reduce<T, R, M, I, F>(_jobs: Option<usize>, items: &[T], map: M, identity: I, reduce: F) -> R
where
    M: Fn(&T) -> R,
    I: Fn() -> R,
    F: Fn(R, R) -> R,
{
    sequential(items, &map, &identity, &reduce)
}

fn sequential<T, R>(items: &[T], map: &impl Fn(&T) -> R, identity: &impl Fn() -> R, reduce: &impl Fn(R, R) -> R) -> R {
    items.iter().fold(identity(), |acc, t| reduce(acc, map(t)))
}
