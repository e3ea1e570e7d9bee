#pragma once

#include <cstdint>
#include <vector>

#include "lbcn/drng.hpp"
#include "lbcn/encoding.hpp"
#include "lbcn/params.hpp"
#include "lbcn/pvss.hpp"

namespace lbcn {

/// On-disk interchange format: "LBCN" magic, u16 version, params block
/// (including the setup seed, so a verifier can rebuild the CRS), directory
/// block, epoch records, then a one-byte digest algorithm tag and a 32-byte
/// integrity digest over all preceding bytes.
struct TranscriptFile {
  SystemParams params;
  Seed setup_seed{};
  bool params_valid = true;  // pvss_setup ran with allow_invalid if false
  PublicDirectory directory;
  std::vector<EpochRecord> records;
};

inline constexpr std::uint16_t kTranscriptVersion = 1;
inline constexpr std::uint8_t kDigestAlgSha256 = 1;

void encode_params(ByteWriter& w, const SystemParams& p);
SystemParams decode_params(ByteReader& r);

void encode_proof(ByteWriter& w, const Proof& p);
Proof decode_proof(ByteReader& r);

void encode_ciphertext(ByteWriter& w, const Ciphertext& c);
Ciphertext decode_ciphertext(ByteReader& r);

void encode_key_announcement(ByteWriter& w, const KeyAnnouncement& ka);
KeyAnnouncement decode_key_announcement(ByteReader& r);

void encode_sharing(ByteWriter& w, const SharingTranscript& tr);
SharingTranscript decode_sharing(ByteReader& r);

void encode_reveal(ByteWriter& w, const DecryptionShare& ds);
DecryptionShare decode_reveal(ByteReader& r);

void encode_directory(ByteWriter& w, const PublicDirectory& dir);
PublicDirectory decode_directory(ByteReader& r);

void encode_epoch_record(ByteWriter& w, const EpochRecord& rec);
EpochRecord decode_epoch_record(ByteReader& r);

Bytes encode_transcript_file(const TranscriptFile& tf);
TranscriptFile decode_transcript_file(const Bytes& data);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, const Bytes& data);

}  // namespace lbcn
