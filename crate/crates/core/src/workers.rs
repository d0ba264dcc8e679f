use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

/// A dedicated worker pool for the data-parallel parts of the crate.
///
/// Operations run inside [`Workers::install`] use exactly this many threads.
/// Results never depend on the thread count: parallel stages only map over
/// ordered inputs and merge in input order.
pub struct Workers {
    pool: ThreadPool,
}

impl Workers {
    pub fn new(threads: usize) -> Result<Self, ThreadPoolBuildError> {
        let pool = ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?;
        Ok(Workers { pool })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }
}
