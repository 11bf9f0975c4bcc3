//! Data-parallel helpers. With the `parallel` feature these fan out over
//! rayon; without it they run the same closures sequentially. Every helper
//! returns results in input order, so output never depends on thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs `f` with parallelism capped at `threads` (`None` keeps the ambient
/// pool). A value of 1 forces the sequential path even when the feature is on.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(t) if t != rayon::current_num_threads() => {
                match rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build() {
                    Ok(pool) => pool.install(f),
                    Err(_) => f(),
                }
            }
            _ => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

/// Number of worker threads the helpers will use right now.
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

pub fn for_each_chunk_mut<T: Send>(data: &mut [T], chunk: usize, f: impl Fn(usize, &mut [T]) + Sync) {
    #[cfg(feature = "parallel")]
    if current_threads() > 1 {
        data.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
        return;
    }
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if current_threads() > 1 {
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// The result for the earliest item (in input order) for which `f` returns
/// `Some`. Later items may be skipped once an earlier hit is known.
pub fn find_map_first<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Option<R> {
    #[cfg(feature = "parallel")]
    if current_threads() > 1 {
        return items.par_iter().find_map_first(f);
    }
    items.iter().find_map(f)
}

/// Some hit, whichever worker gets there first.
pub fn find_map_any<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Option<R> {
    #[cfg(feature = "parallel")]
    if current_threads() > 1 {
        return items.par_iter().find_map_any(f);
    }
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_hit_is_in_input_order() {
        let items: Vec<u32> = (0..1000).collect();
        for t in [1, 2, 4] {
            let hit = with_threads(Some(t), || find_map_first(&items, |&x| (x % 97 == 5 && x > 100).then_some(x)));
            assert_eq!(hit, Some(102));
        }
    }

    #[test]
    fn map_keeps_order() {
        let items: Vec<u32> = (0..100).collect();
        assert_eq!(with_threads(Some(3), || map(&items, |x| x * 2)), items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }
}
