#include "collatz/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "collatz/enumerate.hpp"

namespace collatz {

namespace {

using json = nlohmann::ordered_json;

constexpr int kCheckpointFormatVersion = 1;

struct ChunkResult {
  uint64_t verified = 0;
  uint64_t max_word_len = 0;
  std::map<uint64_t, uint64_t> histogram;
  std::vector<RangeFailure> failures;
};

ChunkResult compute_chunk(const BigInt& lo, uint64_t offset, uint64_t count,
                          uint64_t step_cap) {
  ChunkResult result;
  BigInt x = lo + BigInt(offset);
  for (uint64_t i = 0; i < count; ++i) {
    try {
      const uint64_t len = reduced_dynamics_length(x, step_cap);
      ++result.verified;
      ++result.histogram[len];
      if (len > result.max_word_len) result.max_word_len = len;
    } catch (const CapExceededError&) {
      result.failures.push_back(
          {x, "step cap " + std::to_string(step_cap) + " exceeded"});
    }
    x += 1;
  }
  return result;
}

json chunk_to_json(uint64_t index, const ChunkResult& chunk) {
  json hist = json::object();
  for (const auto& [len, count] : chunk.histogram)
    hist[std::to_string(len)] = count;
  json failures = json::array();
  for (const auto& failure : chunk.failures)
    failures.push_back({{"x", failure.x.to_decimal()}, {"reason", failure.reason}});
  return json{{"type", "chunk"},
              {"index", index},
              {"verified", chunk.verified},
              {"max_word_len", chunk.max_word_len},
              {"histogram", std::move(hist)},
              {"failures", std::move(failures)}};
}

ChunkResult chunk_from_json(const json& record) {
  ChunkResult chunk;
  chunk.verified = record.at("verified").get<uint64_t>();
  chunk.max_word_len = record.at("max_word_len").get<uint64_t>();
  for (const auto& [key, value] : record.at("histogram").items())
    chunk.histogram[std::stoull(key)] = value.get<uint64_t>();
  for (const auto& failure : record.at("failures"))
    chunk.failures.push_back({BigInt::from_decimal(failure.at("x").get<std::string>()),
                              failure.at("reason").get<std::string>()});
  return chunk;
}

std::string fresh_run_id() {
  std::random_device rd;
  uint64_t bits = (static_cast<uint64_t>(rd()) << 32) ^ rd();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(bits));
  return buf;
}

// Append-only checkpoint log. Every record is one JSON line written and
// flushed atomically with respect to other chunks.
class CheckpointLog {
 public:
  CheckpointLog(const std::string& path, bool fresh) {
    out_.open(path, fresh ? std::ios::trunc : std::ios::app);
    if (!out_) throw CheckpointIoError("cannot open checkpoint file: " + path);
    path_ = path;
  }

  void write_header(const std::string& run_id, const BigInt& lo, const BigInt& hi,
                    uint64_t chunk_size, uint64_t step_cap) {
    json header{{"type", "header"},
                {"format_version", kCheckpointFormatVersion},
                {"run_id", run_id},
                {"lo", lo.to_decimal()},
                {"hi", hi.to_decimal()},
                {"chunk_size", chunk_size},
                {"step_cap", step_cap}};
    write_line(header.dump());
  }

  void write_chunk(uint64_t index, const ChunkResult& chunk) {
    write_line(chunk_to_json(index, chunk).dump());
  }

 private:
  void write_line(const std::string& line) {
    std::lock_guard<std::mutex> lock(mutex_);
    out_ << line << '\n';
    out_.flush();
    if (!out_) throw CheckpointIoError("write to checkpoint failed: " + path_);
  }

  std::ofstream out_;
  std::mutex mutex_;
  std::string path_;
};

struct ResumeState {
  std::string run_id;
  std::map<uint64_t, ChunkResult> chunks;
};

// Loads an existing checkpoint, validating that it belongs to the same run
// parameters. Any malformed line is a resume error.
std::optional<ResumeState> load_checkpoint(const std::string& path,
                                           const BigInt& lo, const BigInt& hi,
                                           uint64_t chunk_size, uint64_t step_cap,
                                           uint64_t chunk_count) {
  std::ifstream in(path);
  if (!in) return std::nullopt;  // no file yet: fresh run
  ResumeState state;
  std::string line;
  size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw CheckpointResumeError("corrupt checkpoint " + path + " line " +
                                  std::to_string(line_no) + ": " + e.what());
    }
    try {
      const std::string type = record.at("type").get<std::string>();
      if (type == "header") {
        if (record.at("format_version").get<int>() != kCheckpointFormatVersion)
          throw CheckpointResumeError("checkpoint format version mismatch in " + path);
        if (record.at("lo").get<std::string>() != lo.to_decimal() ||
            record.at("hi").get<std::string>() != hi.to_decimal() ||
            record.at("chunk_size").get<uint64_t>() != chunk_size ||
            record.at("step_cap").get<uint64_t>() != step_cap)
          throw CheckpointResumeError(
              "checkpoint " + path + " belongs to a different run (range, "
              "chunk size, or step cap differ)");
        state.run_id = record.at("run_id").get<std::string>();
        have_header = true;
      } else if (type == "chunk") {
        const uint64_t index = record.at("index").get<uint64_t>();
        if (index >= chunk_count)
          throw CheckpointResumeError("checkpoint chunk index " +
                                      std::to_string(index) + " out of range");
        state.chunks[index] = chunk_from_json(record);
      } else {
        throw CheckpointResumeError("unknown checkpoint record type: " + type);
      }
    } catch (const CheckpointResumeError&) {
      throw;
    } catch (const std::exception& e) {
      throw CheckpointResumeError("corrupt checkpoint " + path + " line " +
                                  std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header)
    throw CheckpointResumeError("checkpoint " + path + " has no header record");
  return state;
}

uint64_t bitset_words(uint64_t bits) { return (bits + 63) / 64; }

// Residues mod 2^level owned by words of length <= level, as a bitset.
// Throws InternalConsistencyError if two classes overlap.
std::vector<uint64_t> covered_bitset(uint64_t level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (level > 28) throw std::invalid_argument("coverage level above 28 not supported");
  const uint64_t total = uint64_t{1} << level;
  std::vector<uint64_t> bits(bitset_words(total), 0);
  enumerate_words(level, [&](const Word& w) {
    const ResidueClass cls = residue_of_word(w);
    const uint64_t residue = cls.residue.to_u64();
    const uint64_t stride = uint64_t{1} << cls.exponent;
    for (uint64_t r = residue; r < total; r += stride) {
      uint64_t& slot = bits[r / 64];
      const uint64_t mask = uint64_t{1} << (r % 64);
      if (slot & mask)
        throw InternalConsistencyError(
            "residue " + std::to_string(r) + " mod 2^" + std::to_string(level) +
            " claimed by two distinct words");
      slot |= mask;
    }
  });
  return bits;
}

}  // namespace

RangeReport verify_range(const BigInt& lo, const BigInt& hi,
                         const VerifyOptions& options) {
  if (lo < BigInt(2)) throw std::invalid_argument("verify_range requires lo >= 2");
  if (hi < lo) throw std::invalid_argument("verify_range requires lo <= hi");
  if (options.chunk_size == 0) throw std::invalid_argument("chunk_size must be > 0");
  BigInt span = hi - lo;
  span += 1;
  if (!span.fits_u64())
    throw std::invalid_argument("range spans more than 2^64 integers");
  const uint64_t count = span.to_u64();
  const uint64_t chunk_size = options.chunk_size;
  const uint64_t chunk_count = (count + chunk_size - 1) / chunk_size;

  std::map<uint64_t, ChunkResult> done;
  std::string run_id = fresh_run_id();
  std::unique_ptr<CheckpointLog> log;
  if (options.checkpoint_path) {
    auto resumed = load_checkpoint(*options.checkpoint_path, lo, hi, chunk_size,
                                   options.step_cap, chunk_count);
    if (resumed) {
      run_id = resumed->run_id;
      done = std::move(resumed->chunks);
      log = std::make_unique<CheckpointLog>(*options.checkpoint_path, false);
    } else {
      log = std::make_unique<CheckpointLog>(*options.checkpoint_path, true);
      log->write_header(run_id, lo, hi, chunk_size, options.step_cap);
    }
  }

  std::vector<uint64_t> pending;
  pending.reserve(chunk_count - done.size());
  for (uint64_t i = 0; i < chunk_count; ++i)
    if (!done.count(i)) pending.push_back(i);

  std::vector<ChunkResult> computed(pending.size());
  if (!pending.empty()) {
    unsigned jobs = options.jobs != 0 ? options.jobs
                                      : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(
        std::min<uint64_t>(jobs, pending.size()));
    std::atomic<size_t> next{0};
    std::atomic<uint64_t> finished{static_cast<uint64_t>(done.size())};
    std::mutex side_effects;  // serializes checkpoint writes and progress calls
    std::exception_ptr first_error;

    auto worker = [&] {
      for (;;) {
        const size_t slot = next.fetch_add(1);
        if (slot >= pending.size()) return;
        const uint64_t index = pending[slot];
        const uint64_t offset = index * chunk_size;
        const uint64_t len = std::min(chunk_size, count - offset);
        ChunkResult result = compute_chunk(lo, offset, len, options.step_cap);
        {
          std::lock_guard<std::mutex> lock(side_effects);
          if (log) log->write_chunk(index, result);
          const uint64_t done_now = finished.fetch_add(1) + 1;
          if (options.progress) options.progress(done_now, chunk_count);
        }
        computed[slot] = std::move(result);
      }
    };

    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      std::mutex error_mutex;
      for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
          try {
            worker();
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            next.store(pending.size());  // drain remaining work
          }
        });
      for (auto& t : pool) t.join();
      if (first_error) std::rethrow_exception(first_error);
    }
  }

  // Deterministic merge in chunk-index order, independent of completion order.
  RangeReport report;
  report.lo = lo;
  report.hi = hi;
  size_t pending_pos = 0;
  for (uint64_t i = 0; i < chunk_count; ++i) {
    const ChunkResult* chunk;
    if (auto it = done.find(i); it != done.end()) {
      chunk = &it->second;
    } else {
      chunk = &computed[pending_pos];
      ++pending_pos;
    }
    report.verified_count += chunk->verified;
    report.max_word_len = std::max(report.max_word_len, chunk->max_word_len);
    for (const auto& [len, n] : chunk->histogram) report.length_histogram[len] += n;
    report.failures.insert(report.failures.end(), chunk->failures.begin(),
                           chunk->failures.end());
  }
  return report;
}

CoverageReport coverage(uint64_t level, size_t sample_limit) {
  const std::vector<uint64_t> bits = covered_bitset(level);
  CoverageReport report;
  report.exponent = level;
  report.total_residues = uint64_t{1} << level;
  for (uint64_t word : bits)
    report.covered_residues += static_cast<uint64_t>(__builtin_popcountll(word));
  for (uint64_t r = 0; r < report.total_residues && report.uncovered_sample.size() < sample_limit;
       ++r) {
    if (!(bits[r / 64] >> (r % 64) & 1)) {
      BigInt rep(r);
      if (r < 2) rep += BigInt::pow2(level);
      report.uncovered_sample.push_back(std::move(rep));
    }
  }
  return report;
}

bool cross_check_coverage(uint64_t level, const BigInt& n, uint64_t step_cap) {
  if (n < BigInt(2)) throw std::invalid_argument("cross_check_coverage requires n >= 2");
  if (!n.fits_u64())
    throw std::invalid_argument("cross_check_coverage sweep bound must fit in 64 bits");
  const std::vector<uint64_t> bits = covered_bitset(level);
  const uint64_t mask = (uint64_t{1} << level) - 1;
  const uint64_t limit = n.to_u64();
  for (uint64_t x = 2; x <= limit; ++x) {
    const uint64_t r = x & mask;
    const bool covered = bits[r / 64] >> (r % 64) & 1;
    const bool settled = reduced_dynamics_length(BigInt(x), step_cap) <= level;
    if (covered != settled) return false;
  }
  return true;
}

}  // namespace collatz
