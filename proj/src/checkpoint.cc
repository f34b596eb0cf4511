#include "xfer/checkpoint.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "xfer/error.h"

namespace xfer {
namespace {

constexpr char kMagic[8] = {'X', 'F', 'E', 'R', 'C', 'K', 'P', 'T'};

template <typename U>
U byteswap(U value) {
  auto bytes = std::bit_cast<std::array<unsigned char, sizeof(U)>>(value);
  std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<U>(bytes);
}

template <typename U>
void write_le(std::ostream& out, U value) {
  if constexpr (std::endian::native == std::endian::big) value = byteswap(value);
  out.write(reinterpret_cast<const char*>(&value), sizeof(U));
}

template <typename U>
U read_le(std::istream& in) {
  U value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(U));
  if (!in) throw FormatError("checkpoint truncated in preamble");
  if constexpr (std::endian::native == std::endian::big) value = byteswap(value);
  return value;
}

void write_floats(std::ostream& out, const float* data, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n * sizeof(float)));
  } else {
    for (std::size_t i = 0; i < n; ++i) write_le(out, std::bit_cast<std::uint32_t>(data[i]));
  }
}

void read_floats(std::istream& in, float* data, std::size_t n) {
  in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n * sizeof(float)));
  if (!in) throw FormatError("checkpoint payload truncated");
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < n; ++i) {
      data[i] = std::bit_cast<float>(byteswap(std::bit_cast<std::uint32_t>(data[i])));
    }
  }
}

}  // namespace

std::string_view phase_kind_name(PhaseKind kind) {
  return kind == PhaseKind::kPretrain ? "pretrain" : "finetune";
}

PhaseKind parse_phase_kind(std::string_view name) {
  if (name == "pretrain") return PhaseKind::kPretrain;
  if (name == "finetune") return PhaseKind::kFinetune;
  throw InvalidArgument("unknown phase kind '" + std::string(name) + "'");
}

nlohmann::json ProvenanceEntry::to_json() const {
  std::vector<std::string> langs;
  for (Language l : languages) langs.push_back(language_name(l));
  return {{"phase", phase_kind_name(phase)},
          {"role", role_name(role)},
          {"languages", langs},
          {"examples", examples},
          {"epochs", epochs},
          {"best_epoch", best_epoch},
          {"learning_rate", learning_rate},
          {"heldout_loss", heldout_loss},
          {"seed", seed},
          {"event_loss", event_loss}};
}

ProvenanceEntry ProvenanceEntry::from_json(const nlohmann::json& j) {
  ProvenanceEntry p;
  p.phase = parse_phase_kind(j.at("phase").get<std::string>());
  p.role = parse_role(j.at("role").get<std::string>());
  for (const auto& l : j.at("languages")) p.languages.push_back(parse_language(l.get<std::string>()));
  p.examples = j.value("examples", std::size_t{0});
  p.epochs = j.at("epochs").get<int>();
  p.best_epoch = j.value("best_epoch", p.epochs);
  p.learning_rate = j.at("learning_rate").get<double>();
  p.heldout_loss = j.value("heldout_loss", 0.0);
  p.seed = j.value("seed", std::uint64_t{0});
  p.event_loss = j.value("event_loss", std::string("sequence"));
  return p;
}

ModelCheckpoint ModelCheckpoint::fresh(ModelConfig config, Vocabulary vocab) {
  config.vocab_size = vocab.size();
  ModelCheckpoint ck;
  ck.params = Parameters<float>::initialized(config);
  ck.config = config;
  ck.vocab = std::move(vocab);
  return ck;
}

void ModelCheckpoint::save(std::ostream& out) const {
  if (config.vocab_size != vocab.size()) {
    throw InvalidArgument("checkpoint config.vocab_size does not match its vocabulary");
  }
  nlohmann::json header;
  header["config"] = config.to_json();
  nlohmann::json prov = nlohmann::json::array();
  for (const auto& p : provenance) prov.push_back(p.to_json());
  header["provenance"] = prov;
  nlohmann::json vocab_rows = nlohmann::json::array();
  for (int i = 0; i < vocab.size(); ++i) vocab_rows.push_back({vocab.token(i), vocab.count(i)});
  header["vocabulary"] = vocab_rows;
  nlohmann::json tensors = nlohmann::json::array();
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i < params.count(); ++i) {
    const auto& t = params.tensor(i);
    const auto bytes = static_cast<std::uint64_t>(t.size()) * sizeof(float);
    tensors.push_back(
        {{"name", params.name(i)}, {"shape", {t.rows(), t.cols()}}, {"offset", offset}, {"bytes", bytes}});
    offset += bytes;
  }
  header["tensors"] = tensors;
  header["dtype"] = "float32-le";
  const std::string text = header.dump();

  out.write(kMagic, sizeof(kMagic));
  write_le<std::uint32_t>(out, format_version);
  write_le<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (std::size_t i = 0; i < params.count(); ++i) {
    write_floats(out, params.tensor(i).data(), static_cast<std::size_t>(params.tensor(i).size()));
  }
  if (!out) throw Error("checkpoint write failed");
}

void ModelCheckpoint::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    save(out);
    out.flush();
    if (!out) throw Error("checkpoint write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

ModelCheckpoint load_unchecked(std::istream& in) {
  using Self = ModelCheckpoint;
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("not a checkpoint (bad magic)");
  }
  Self ck;
  ck.format_version = read_le<std::uint32_t>(in);
  if (ck.format_version != Self::kFormatVersion) {
    throw FormatError("unsupported checkpoint version " + std::to_string(ck.format_version));
  }
  const auto header_len = read_le<std::uint64_t>(in);
  if (header_len > (1ULL << 31)) throw FormatError("checkpoint header length is implausible");
  std::string text(header_len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(header_len));
  if (!in) throw FormatError("checkpoint header truncated");

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(text);
    ck.config = ModelConfig::from_json(header.at("config"));
    for (const auto& p : header.at("provenance")) ck.provenance.push_back(ProvenanceEntry::from_json(p));
    std::vector<std::pair<std::string, std::int64_t>> rows;
    for (const auto& row : header.at("vocabulary")) {
      rows.emplace_back(row.at(0).get<std::string>(), row.at(1).get<std::int64_t>());
    }
    ck.vocab = Vocabulary::from_rows(std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed checkpoint header: ") + e.what());
  }
  try {
    ck.config.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("checkpoint config invalid: ") + e.what());
  }
  if (ck.config.vocab_size != ck.vocab.size()) {
    throw FormatError("checkpoint vocabulary has " + std::to_string(ck.vocab.size()) +
                      " entries but config says " + std::to_string(ck.config.vocab_size));
  }
  ck.params = Parameters<float>(ck.config);
  const auto& manifest = header.at("tensors");
  if (manifest.size() != ck.params.count()) {
    throw FormatError("checkpoint has " + std::to_string(manifest.size()) + " tensors, expected " +
                      std::to_string(ck.params.count()));
  }
  for (std::size_t i = 0; i < ck.params.count(); ++i) {
    const auto& m = manifest[i];
    Matrix<float>& t = ck.params.tensor(i);
    if (m.at("name").get<std::string>() != ck.params.name(i) ||
        m.at("shape").at(0).get<Eigen::Index>() != t.rows() ||
        m.at("shape").at(1).get<Eigen::Index>() != t.cols()) {
      throw FormatError("checkpoint tensor #" + std::to_string(i) + " ('" +
                        m.at("name").get<std::string>() + "') does not match the config");
    }
    read_floats(in, t.data(), static_cast<std::size_t>(t.size()));
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw FormatError("trailing bytes after checkpoint payload");
  }
  return ck;
}

}  // namespace

ModelCheckpoint ModelCheckpoint::load(std::istream& in) {
  try {
    return load_unchecked(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed checkpoint header: ") + e.what());
  }
}

ModelCheckpoint ModelCheckpoint::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open checkpoint " + path.string());
  try {
    return load(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace xfer
