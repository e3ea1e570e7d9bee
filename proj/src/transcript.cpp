#include "lbcn/transcript.hpp"

#include <fstream>

#include "lbcn/digest.hpp"

namespace lbcn {

namespace {
constexpr std::uint64_t kMaxParticipants = 1u << 16;
constexpr std::uint64_t kMaxEpochs = 1u << 24;
}  // namespace

void encode_params(ByteWriter& w, const SystemParams& p) {
  w.str(p.name);
  w.u64(p.p);
  w.u64(p.q);
  w.u64(p.u);
  w.u64(p.v);
  w.f64(p.alpha);
  w.f64(p.beta);
  w.f64(p.r_enc);
  w.u64(p.n);
  w.u64(p.t);
  w.u64(p.lambda_sec);
  w.u64(p.rep);
}

SystemParams decode_params(ByteReader& r) {
  SystemParams p;
  p.name = r.str();
  p.p = r.u64();
  p.q = r.u64();
  p.u = r.u64();
  p.v = r.u64();
  p.alpha = r.f64();
  p.beta = r.f64();
  p.r_enc = r.f64();
  p.n = r.u64();
  p.t = r.u64();
  p.lambda_sec = static_cast<std::uint32_t>(r.u64());
  p.rep = static_cast<std::uint32_t>(r.u64());
  return p;
}

void encode_proof(ByteWriter& w, const Proof& p) {
  w.u64(p.rep);
  w.u64(p.commitments.size());
  for (const auto& c : p.commitments) w.zq_vector(c);
  w.bytes(p.challenges);
  w.u64(p.responses.size());
  for (const auto& z : p.responses) w.z_vector(z);
}

Proof decode_proof(ByteReader& r) {
  Proof p;
  p.rep = static_cast<std::uint32_t>(r.u64());
  std::uint64_t nc = r.length(1u << 20);
  p.commitments.resize(nc);
  for (auto& c : p.commitments) c = r.zq_vector();
  p.challenges = r.bytes();
  std::uint64_t nz = r.length(1u << 20);
  p.responses.resize(nz);
  for (auto& z : p.responses) z = r.z_vector();
  return p;
}

void encode_ciphertext(ByteWriter& w, const Ciphertext& c) {
  w.zq_vector(c.c1);
  w.zq(c.c2);
}

Ciphertext decode_ciphertext(ByteReader& r) {
  Ciphertext c;
  c.c1 = r.zq_vector();
  c.c2 = r.zq();
  return c;
}

void encode_key_announcement(ByteWriter& w, const KeyAnnouncement& ka) {
  w.zq_vector(ka.pk_b);
  encode_proof(w, ka.proof0);
}

KeyAnnouncement decode_key_announcement(ByteReader& r) {
  KeyAnnouncement ka;
  ka.pk_b = r.zq_vector();
  ka.proof0 = decode_proof(r);
  return ka;
}

void encode_sharing(ByteWriter& w, const SharingTranscript& tr) {
  w.u64(tr.dealer);
  w.u64(tr.ciphertexts.size());
  for (const auto& c : tr.ciphertexts) encode_ciphertext(w, c);
  encode_proof(w, tr.proof1);
}

SharingTranscript decode_sharing(ByteReader& r) {
  SharingTranscript tr;
  tr.dealer = r.u64();
  std::uint64_t n = r.length(kMaxParticipants);
  tr.ciphertexts.resize(n);
  for (auto& c : tr.ciphertexts) c = decode_ciphertext(r);
  tr.proof1 = decode_proof(r);
  return tr;
}

void encode_reveal(ByteWriter& w, const DecryptionShare& ds) {
  w.u64(ds.holder);
  w.zq(ds.share);
  encode_proof(w, ds.proof2);
}

DecryptionShare decode_reveal(ByteReader& r) {
  DecryptionShare ds;
  ds.holder = r.u64();
  ds.share = r.zq();
  ds.proof2 = decode_proof(r);
  return ds;
}

void encode_directory(ByteWriter& w, const PublicDirectory& dir) {
  w.u64(dir.qual.size());
  for (std::uint64_t v : dir.qual) w.u64(v);
  w.u64(dir.renumbering.size());
  for (const auto& [orig, qid] : dir.renumbering) {
    w.u64(orig);
    w.u64(qid);
  }
  w.u64(dir.announcements.size());
  for (const auto& [key, ka] : dir.announcements) {
    w.u64(key.dealer);
    w.u64(key.holder);
    encode_key_announcement(w, ka);
  }
}

PublicDirectory decode_directory(ByteReader& r) {
  PublicDirectory dir;
  std::uint64_t nq = r.length(kMaxParticipants);
  dir.qual.resize(nq);
  for (auto& v : dir.qual) v = r.u64();
  std::uint64_t nr = r.length(kMaxParticipants);
  for (std::uint64_t i = 0; i < nr; ++i) {
    std::uint64_t orig = r.u64();
    std::uint64_t qid = r.u64();
    dir.renumbering[orig] = qid;
  }
  std::uint64_t na = r.length(kMaxParticipants * kMaxParticipants);
  for (std::uint64_t i = 0; i < na; ++i) {
    KeyId key;
    key.dealer = r.u64();
    key.holder = r.u64();
    dir.announcements[key] = decode_key_announcement(r);
  }
  return dir;
}

void encode_epoch_record(ByteWriter& w, const EpochRecord& rec) {
  w.u64(rec.epoch);
  w.u64(rec.qual_prime.size());
  for (std::uint64_t v : rec.qual_prime) w.u64(v);
  w.u64(rec.sharings.size());
  for (const auto& [dealer, tr] : rec.sharings) {
    w.u64(dealer);
    encode_sharing(w, tr);
  }
  w.u64(rec.reveals.size());
  for (const auto& [key, ds] : rec.reveals) {
    w.u64(key.dealer);
    w.u64(key.holder);
    encode_reveal(w, ds);
  }
  w.u64(rec.share_sets.size());
  for (const auto& [dealer, s] : rec.share_sets) {
    w.u64(dealer);
    w.u64(s.size());
    for (std::uint64_t v : s) w.u64(v);
  }
  w.u64(rec.secrets.size());
  for (const auto& [dealer, s] : rec.secrets) {
    w.u64(dealer);
    w.zq(s);
  }
  // bottom encodes as a presence flag, never as a magic value
  w.u8(rec.omega.has_value() ? 1 : 0);
  if (rec.omega) w.zq(*rec.omega);
}

EpochRecord decode_epoch_record(ByteReader& r) {
  EpochRecord rec;
  rec.epoch = r.u64();
  std::uint64_t nqp = r.length(kMaxParticipants);
  rec.qual_prime.resize(nqp);
  for (auto& v : rec.qual_prime) v = r.u64();
  std::uint64_t ns = r.length(kMaxParticipants);
  for (std::uint64_t i = 0; i < ns; ++i) {
    std::uint64_t dealer = r.u64();
    rec.sharings[dealer] = decode_sharing(r);
  }
  std::uint64_t nrv = r.length(kMaxParticipants * kMaxParticipants);
  for (std::uint64_t i = 0; i < nrv; ++i) {
    KeyId key;
    key.dealer = r.u64();
    key.holder = r.u64();
    rec.reveals[key] = decode_reveal(r);
  }
  std::uint64_t nss = r.length(kMaxParticipants);
  for (std::uint64_t i = 0; i < nss; ++i) {
    std::uint64_t dealer = r.u64();
    std::uint64_t len = r.length(kMaxParticipants);
    std::vector<std::uint64_t> s(len);
    for (auto& v : s) v = r.u64();
    rec.share_sets[dealer] = std::move(s);
  }
  std::uint64_t nsec = r.length(kMaxParticipants);
  for (std::uint64_t i = 0; i < nsec; ++i) {
    std::uint64_t dealer = r.u64();
    rec.secrets[dealer] = r.zq();
  }
  std::uint8_t has_omega = r.u8();
  if (has_omega > 1) throw DecodeError(DecodeErrorKind::malformed, "bad presence flag");
  if (has_omega) rec.omega = r.zq();
  return rec;
}

Bytes encode_transcript_file(const TranscriptFile& tf) {
  ByteWriter w(int_width(tf.params.q));
  w.raw(reinterpret_cast<const std::uint8_t*>("LBCN"), 4);
  w.u16(kTranscriptVersion);
  encode_params(w, tf.params);
  w.raw(tf.setup_seed.data(), tf.setup_seed.size());
  w.u8(tf.params_valid ? 1 : 0);
  encode_directory(w, tf.directory);
  w.u64(tf.records.size());
  for (const auto& rec : tf.records) encode_epoch_record(w, rec);
  w.u8(kDigestAlgSha256);
  Bytes body = w.take();
  Digest32 d = sha256(body);
  body.insert(body.end(), d.begin(), d.end());
  return body;
}

TranscriptFile decode_transcript_file(const Bytes& data) {
  if (data.size() < 4 + 2 + 33) {
    throw DecodeError(DecodeErrorKind::malformed, "file too short");
  }
  if (!(data[0] == 'L' && data[1] == 'B' && data[2] == 'C' && data[3] == 'N')) {
    throw DecodeError(DecodeErrorKind::bad_magic, "bad magic");
  }
  const std::uint16_t version = static_cast<std::uint16_t>(data[4] | (data[5] << 8));
  if (version != kTranscriptVersion) {
    throw DecodeError(DecodeErrorKind::version_unsupported,
                      "unsupported version " + std::to_string(version));
  }
  Bytes body(data.begin(), data.end() - 32);
  Digest32 expect = sha256(body);
  if (!std::equal(expect.begin(), expect.end(), data.end() - 32)) {
    throw DecodeError(DecodeErrorKind::digest_mismatch, "integrity digest mismatch");
  }

  // Parse the params block with a provisional width to learn q, then restart
  // with the real width for the remainder.
  Bytes head(data.begin() + 6, data.end() - 32);
  ByteReader probe(head, 1, ~std::uint64_t{0});
  SystemParams params = decode_params(probe);
  if (params.q < 2) throw DecodeError(DecodeErrorKind::malformed, "bad modulus");

  TranscriptFile tf;
  tf.params = params;
  ByteReader r(head, int_width(params.q), params.q);
  decode_params(r);  // skip past, widths of the params block are fixed
  r.raw(tf.setup_seed.data(), tf.setup_seed.size());
  std::uint8_t valid_flag = r.u8();
  if (valid_flag > 1) throw DecodeError(DecodeErrorKind::malformed, "bad validity flag");
  tf.params_valid = valid_flag == 1;
  tf.directory = decode_directory(r);
  std::uint64_t nrec = r.length(kMaxEpochs);
  tf.records.resize(nrec);
  for (auto& rec : tf.records) rec = decode_epoch_record(r);
  std::uint8_t alg = r.u8();
  if (alg != kDigestAlgSha256) {
    throw DecodeError(DecodeErrorKind::malformed, "unknown digest algorithm");
  }
  if (!r.done()) throw DecodeError(DecodeErrorKind::malformed, "trailing bytes");
  return tf;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError(DecodeErrorKind::malformed, "cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::config_error, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::config_error, "short write to " + path);
}

}  // namespace lbcn
