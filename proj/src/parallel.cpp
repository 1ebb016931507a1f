#include "flabench/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

namespace flabench {
namespace {

int g_threads = 1;

struct Pool {
  std::mutex mu;
  std::condition_variable cv_work;
  std::condition_variable cv_done;
  std::vector<std::thread> workers;
  const std::function<void(int64_t)>* body = nullptr;
  int64_t begin = 0, end = 0;
  std::atomic<int64_t> next_chunk{0};
  int64_t chunk_size = 1;
  int64_t num_chunks = 0;
  uint64_t generation = 0;
  int busy = 0;
  bool shutdown = false;

  explicit Pool(int nworkers) {
    workers.reserve(nworkers);
    for (int i = 0; i < nworkers; ++i) workers.emplace_back([this] { worker_loop(); });
  }

  ~Pool() {
    {
      std::lock_guard<std::mutex> lk(mu);
      shutdown = true;
    }
    cv_work.notify_all();
    for (auto& t : workers) t.join();
  }

  void drain_chunks() {
    int64_t ck;
    while ((ck = next_chunk.fetch_add(1)) < num_chunks) {
      const int64_t lo = begin + ck * chunk_size;
      const int64_t hi = std::min(end, lo + chunk_size);
      for (int64_t i = lo; i < hi; ++i) (*body)(i);
    }
  }

  void worker_loop() {
    uint64_t seen = 0;
    std::unique_lock<std::mutex> lk(mu);
    for (;;) {
      cv_work.wait(lk, [&] { return shutdown || generation != seen; });
      if (shutdown) return;
      seen = generation;
      ++busy;
      lk.unlock();
      drain_chunks();
      lk.lock();
      if (--busy == 0) cv_done.notify_one();
    }
  }

  void run(int64_t b, int64_t e, const std::function<void(int64_t)>& f) {
    {
      std::lock_guard<std::mutex> lk(mu);
      body = &f;
      begin = b;
      end = e;
      const int64_t range = e - b;
      const int64_t target = static_cast<int64_t>(workers.size() + 1) * 4;
      chunk_size = std::max<int64_t>(1, (range + target - 1) / target);
      num_chunks = (range + chunk_size - 1) / chunk_size;
      next_chunk.store(0);
      ++generation;
    }
    cv_work.notify_all();
    drain_chunks();  // calling thread participates
    std::unique_lock<std::mutex> lk(mu);
    cv_done.wait(lk, [&] { return busy == 0; });
    body = nullptr;
  }
};

Pool* pool_for(int nthreads) {
  static Pool* pool = nullptr;
  static int pool_threads = 0;
  if (pool == nullptr || pool_threads != nthreads) {
    delete pool;
    pool = new Pool(nthreads - 1);
    pool_threads = nthreads;
  }
  return pool;
}

}  // namespace

void set_threads(int n) { g_threads = n < 1 ? 1 : n; }

int threads() { return g_threads; }

void parallel_for(int64_t begin, int64_t end, const std::function<void(int64_t)>& body) {
  if (end <= begin) return;
  const int nt = g_threads;
  if (nt <= 1 || end - begin == 1) {
    for (int64_t i = begin; i < end; ++i) body(i);
    return;
  }
  pool_for(nt)->run(begin, end, body);
}

}  // namespace flabench
