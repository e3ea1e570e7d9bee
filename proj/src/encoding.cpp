#include "lbcn/encoding.hpp"

#include <cstring>

namespace lbcn {

void ByteWriter::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v));
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

void ByteWriter::f64(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  u64(bits);
}

void ByteWriter::zq(std::uint64_t v) {
  for (std::size_t i = 0; i < q_width_; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::bytes(const Bytes& b) {
  u64(b.size());
  out_.insert(out_.end(), b.begin(), b.end());
}

void ByteWriter::raw(const std::uint8_t* data, std::size_t len) {
  out_.insert(out_.end(), data, data + len);
}

void ByteWriter::str(const std::string& s) {
  u64(s.size());
  out_.insert(out_.end(), s.begin(), s.end());
}

void ByteWriter::zq_vector(const ZqVector& v) {
  u64(v.size());
  for (std::uint64_t e : v) zq(e);
}

void ByteWriter::z_vector(const ZVector& v) {
  u64(v.size());
  for (std::int64_t e : v) i64(e);
}

void ByteReader::need(std::size_t n) {
  if (data_.size() - pos_ < n) throw DecodeError(DecodeErrorKind::malformed, "truncated input");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

std::uint16_t ByteReader::u16() {
  need(2);
  std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
  pos_ += 2;
  return v;
}

std::uint64_t ByteReader::u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

std::int64_t ByteReader::i64() { return static_cast<std::int64_t>(u64()); }

double ByteReader::f64() {
  std::uint64_t bits = u64();
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

std::uint64_t ByteReader::zq() {
  need(q_width_);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < q_width_; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += q_width_;
  if (v >= q_) throw DecodeError(DecodeErrorKind::malformed, "mod-q value out of range");
  return v;
}

Bytes ByteReader::bytes() {
  std::uint64_t len = u64();
  need(len);
  Bytes b(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
          data_.begin() + static_cast<std::ptrdiff_t>(pos_ + len));
  pos_ += len;
  return b;
}

void ByteReader::raw(std::uint8_t* out, std::size_t len) {
  need(len);
  std::memcpy(out, data_.data() + pos_, len);
  pos_ += len;
}

std::string ByteReader::str() {
  std::uint64_t len = u64();
  need(len);
  std::string s(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
                data_.begin() + static_cast<std::ptrdiff_t>(pos_ + len));
  pos_ += len;
  return s;
}

std::uint64_t ByteReader::length(std::uint64_t max_elems) {
  std::uint64_t len = u64();
  if (len > max_elems || len > remaining()) {
    throw DecodeError(DecodeErrorKind::malformed, "implausible sequence length");
  }
  return len;
}

ZqVector ByteReader::zq_vector() {
  std::uint64_t len = length(remaining() / q_width_ + 1);
  ZqVector v(len);
  for (auto& e : v) e = zq();
  return v;
}

ZVector ByteReader::z_vector() {
  std::uint64_t len = length(remaining() / 8 + 1);
  ZVector v(len);
  for (auto& e : v) e = i64();
  return v;
}

}  // namespace lbcn
