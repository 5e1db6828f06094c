#include "qo/spectra_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qo/error.hpp"

namespace qo {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string json_escape(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

RawSpectrum parse_spectrum(std::string_view text, std::string name, std::string source) {
  std::map<std::size_t, double> rows;
  std::size_t line_no = 0;
  bool header_allowed = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
      throw ParseError(source, line_no, "expected 'harmonic_index,power'");
    const auto idx_text = trim(line.substr(0, comma));
    const auto pow_text = trim(line.substr(comma + 1));

    if (header_allowed && lower(idx_text) == "harmonic_index" && lower(pow_text) == "power") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    const auto idx = parse_number<std::size_t>(idx_text);
    if (!idx || *idx == 0)
      throw ParseError(source, line_no, "harmonic index '" + std::string(idx_text) + "' is not a positive integer");
    const auto power = parse_number<double>(pow_text);
    if (!power || !std::isfinite(*power))
      throw ParseError(source, line_no, "power '" + std::string(pow_text) + "' is not a number");
    if (*power < 0.0) throw ParseError(source, line_no, "negative power " + std::string(pow_text));
    if (!rows.emplace(*idx, *power).second)
      throw ParseError(source, line_no, "duplicate harmonic index " + std::to_string(*idx));
  }
  if (rows.empty()) throw ParseError(source, 0, "no spectrum rows");

  RawSpectrum out{std::move(name), std::vector<double>(rows.rbegin()->first, 0.0), std::move(source)};
  for (auto [k, p] : rows) out.powers[k - 1] = p;
  if (std::none_of(out.powers.begin(), out.powers.end(), [](double p) { return p > 0.0; }))
    throw ParseError(out.source_path, 0, "spectrum has no positive power");
  return out;
}

RawSpectrum load_spectrum(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (name.empty()) name = path.stem().string();
  return parse_spectrum(buf.str(), std::move(name), path.string());
}

RawSpectrum truncate(const RawSpectrum& raw, std::size_t n) {
  if (n == 0) throw InvalidArgument("cannot truncate a spectrum to zero harmonics");
  RawSpectrum out = raw;
  if (out.powers.size() > n) out.powers.resize(n);
  return out;
}

TimbralVector normalize(const RawSpectrum& raw, std::optional<std::size_t> pad_to) {
  double total = 0.0;
  for (double p : raw.powers) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidArgument("spectrum '" + raw.name + "' has an invalid power");
    total += p;
  }
  if (!(total > 0.0)) throw InvalidArgument("spectrum '" + raw.name + "' has zero total power");
  if (pad_to && *pad_to < raw.powers.size())
    throw InvalidArgument("cannot pad spectrum '" + raw.name + "' of " + std::to_string(raw.powers.size()) +
                          " harmonics to " + std::to_string(*pad_to));
  std::vector<double> power(pad_to.value_or(raw.powers.size()), 0.0);
  for (std::size_t k = 0; k < raw.powers.size(); ++k) power[k] = raw.powers[k] / total;
  return TimbralVector(std::move(power), raw.name);
}

std::vector<TimbralVector> load_collection(const std::filesystem::path& dir, const CollectionOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw InvalidArgument("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<TimbralVector> out;
  for (const auto& f : files) {
    RawSpectrum raw = load_spectrum(f);
    if (options.truncate_to) raw = truncate(raw, *options.truncate_to);
    out.push_back(normalize(raw, options.pad_to));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name() < b.name(); });
  return out;
}

std::string write_spectrum_csv(const TimbralVector& v) {
  std::string out = "harmonic_index,power\n";
  char buf[64];
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v[k]);
    out += std::to_string(k + 1) + "," + std::string(buf, ptr) + "\n";
  }
  return out;
}

nlohmann::json timbral_to_json(const TimbralVector& v) {
  return {{"name", v.name()}, {"power", std::vector<double>(v.power().begin(), v.power().end())}};
}

TimbralVector timbral_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("power") || !j["power"].is_array())
    throw InvalidArgument("timbral vector JSON needs a \"power\" array");
  std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string{};
  return TimbralVector(j["power"].get<std::vector<double>>(), std::move(name));
}

std::string export_dot(const BrightnessHasse& hasse) {
  const auto& names = hasse.names;
  std::vector<std::size_t> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return names[a] < names[b]; });

  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : hasse.covers.pairs()) edges.emplace_back(names[u], names[v]);
  std::sort(edges.begin(), edges.end());

  std::string out = "digraph brightness {\n";
  if (!names.empty()) out += "  rankdir=BT;\n";
  for (auto i : order) out += "  " + json_escape(names[i]) + ";\n";
  for (const auto& [u, v] : edges) out += "  " + json_escape(u) + " -> " + json_escape(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace qo
