#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lbcn/error.hpp"
#include "lbcn/zq.hpp"

namespace lbcn {

using Bytes = std::vector<std::uint8_t>;

/// Canonical byte encoding shared by the transcript file format and the proof
/// layer's challenge derivation: mod-q integers little-endian at fixed width
/// ceil(log_256 q), sequence lengths as u64, maps iterated in key order,
/// absent values as a presence flag. Encoding a value twice yields identical
/// bytes.
class ByteWriter {
 public:
  explicit ByteWriter(std::size_t q_width) : q_width_(q_width) {}

  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v);  // two's complement, 8 bytes LE
  void f64(double v);        // IEEE-754 bits, 8 bytes LE
  void zq(std::uint64_t v);  // fixed q_width bytes LE
  void bytes(const Bytes& b);
  void raw(const std::uint8_t* data, std::size_t len);
  void str(const std::string& s);

  void zq_vector(const ZqVector& v);
  void z_vector(const ZVector& v);

  std::size_t q_width() const { return q_width_; }
  const Bytes& data() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  std::size_t q_width_;
  Bytes out_;
};

class ByteReader {
 public:
  ByteReader(const Bytes& data, std::size_t q_width, std::uint64_t q)
      : data_(data), q_width_(q_width), q_(q) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint64_t u64();
  std::int64_t i64();
  double f64();
  std::uint64_t zq();  // validated < q
  Bytes bytes();
  void raw(std::uint8_t* out, std::size_t len);
  std::string str();

  ZqVector zq_vector();
  ZVector z_vector();

  /// Length sanity guard for length-prefixed sequences.
  std::uint64_t length(std::uint64_t max_elems);

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n);

  const Bytes& data_;
  std::size_t pos_ = 0;
  std::size_t q_width_;
  std::uint64_t q_;
};

}  // namespace lbcn
