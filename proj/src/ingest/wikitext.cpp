#include "anchorlink/ingest/wikitext.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "anchorlink/ingest/dump_reader.hpp"
#include "anchorlink/text/utf8.hpp"

namespace anchorlink {
namespace {

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
  if (text.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i]) return false;
  }
  return true;
}

std::size_t find_ci(std::string_view text, std::size_t from, std::string_view needle) {
  for (std::size_t pos = from; pos + needle.size() <= text.size(); ++pos) {
    if (starts_with_ci(text, pos, needle)) return pos;
  }
  return std::string_view::npos;
}

bool at_line_start(std::string_view text, std::size_t pos) {
  while (pos > 0) {
    const char c = text[pos - 1];
    if (c == '\n') return true;
    if (c != ' ' && c != '\t') return false;
    --pos;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

/// Skips a {{template}} or line-start {| table |} beginning at `pos`.
/// Returns the position just past the construct, or npos when unbalanced.
std::size_t skip_braces(std::string_view text, std::size_t pos) {
  int depth = 0;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "{{") == 0) {
      ++depth;
      pos += 2;
    } else if (text.compare(pos, 2, "{|") == 0 && at_line_start(text, pos)) {
      ++depth;
      pos += 2;
    } else if (text.compare(pos, 2, "}}") == 0) {
      --depth;
      pos += 2;
    } else if (text.compare(pos, 2, "|}") == 0 && at_line_start(text, pos)) {
      --depth;
      pos += 2;
    } else {
      ++pos;
    }
    if (depth <= 0) return pos;
  }
  return std::string_view::npos;
}

/// Skips a (possibly nested) [[...]] beginning at `pos`.
std::size_t skip_brackets(std::string_view text, std::size_t pos) {
  int depth = 0;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "[[") == 0) {
      ++depth;
      pos += 2;
    } else if (text.compare(pos, 2, "]]") == 0) {
      --depth;
      pos += 2;
      if (depth == 0) return pos;
    } else {
      ++pos;
    }
  }
  return std::string_view::npos;
}

bool is_media_link(std::string_view text, std::size_t pos) {
  std::size_t p = pos + 2;
  while (p < text.size() && (text[p] == ' ' || text[p] == ':')) ++p;
  for (std::string_view ns : {"file:", "image:", "media:", "category:"}) {
    if (starts_with_ci(text, p, ns)) return true;
  }
  return false;
}

bool is_external_link(std::string_view text, std::size_t pos) {
  if (text[pos] != '[' || (pos + 1 < text.size() && text[pos + 1] == '[')) return false;
  for (std::string_view scheme : {"http://", "https://", "ftp://", "//"}) {
    if (starts_with_ci(text, pos + 1, scheme)) return true;
  }
  return false;
}

struct Entity {
  std::string_view name;
  std::string_view value;
};

constexpr std::array<Entity, 9> kEntities{{{"&nbsp;", " "},
                                           {"&amp;", "&"},
                                           {"&lt;", "<"},
                                           {"&gt;", ">"},
                                           {"&quot;", "\""},
                                           {"&apos;", "'"},
                                           {"&ndash;", "\xE2\x80\x93"},
                                           {"&mdash;", "\xE2\x80\x94"},
                                           {"&minus;", "\xE2\x88\x92"}}};

/// Decodes an HTML entity at `pos`; returns the number of bytes consumed, 0 if none.
std::size_t decode_entity(std::string_view text, std::size_t pos, std::string& out) {
  for (const auto& entity : kEntities) {
    if (text.compare(pos, entity.name.size(), entity.name) == 0) {
      out.append(entity.value);
      return entity.name.size();
    }
  }
  if (text.compare(pos, 2, "&#") == 0) {
    const std::size_t semi = text.find(';', pos);
    if (semi == std::string_view::npos || semi - pos > 10) return 0;
    std::string_view digits = text.substr(pos + 2, semi - pos - 2);
    int base = 10;
    if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
      base = 16;
      digits.remove_prefix(1);
    }
    std::uint32_t cp = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, base);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || cp == 0 || cp > 0x10FFFF) {
      return 0;
    }
    utf8::append(out, static_cast<char32_t>(cp));
    return semi - pos + 1;
  }
  return 0;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(text, pos);
    if (utf8::is_space(cp)) {
      pending = !out.empty();
      continue;
    }
    if (pending) {
      out.push_back(' ');
      pending = false;
    }
    out.append(text.substr(start, pos - start));
  }
  return out;
}

bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

MarkupWarnings& MarkupWarnings::operator+=(const MarkupWarnings& other) {
  unbalanced_templates += other.unbalanced_templates;
  unclosed_comments += other.unclosed_comments;
  unclosed_refs += other.unclosed_refs;
  unclosed_links += other.unclosed_links;
  return *this;
}

std::string extract_abstract(std::string_view text, MarkupWarnings* warnings) {
  MarkupWarnings local;
  std::string out;
  out.reserve(std::min<std::size_t>(text.size(), 1 << 14));
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '<' && text.compare(pos, 4, "<!--") == 0) {
      const std::size_t close = text.find("-->", pos + 4);
      if (close == std::string_view::npos) {
        ++local.unclosed_comments;
        break;
      }
      pos = close + 3;
    } else if (c == '{' && (text.compare(pos, 2, "{{") == 0 ||
                            (text.compare(pos, 2, "{|") == 0 && at_line_start(text, pos)))) {
      const std::size_t after = skip_braces(text, pos);
      if (after == std::string_view::npos) {
        ++local.unbalanced_templates;
        break;
      }
      pos = after;
    } else if (c == '<' && starts_with_ci(text, pos, "<ref") &&
               pos + 4 < text.size() &&
               (text[pos + 4] == '>' || text[pos + 4] == ' ' || text[pos + 4] == '/')) {
      const std::size_t tag_end = text.find('>', pos);
      if (tag_end == std::string_view::npos) {
        ++local.unclosed_refs;
        break;
      }
      if (text[tag_end - 1] == '/') {
        pos = tag_end + 1;
        continue;
      }
      const std::size_t close = find_ci(text, tag_end + 1, "</ref>");
      if (close == std::string_view::npos) {
        ++local.unclosed_refs;
        break;
      }
      pos = close + 6;
    } else if (c == '<' && pos + 1 < text.size() &&
               (std::isalpha(static_cast<unsigned char>(text[pos + 1])) ||
                (text[pos + 1] == '/' && pos + 2 < text.size() &&
                 std::isalpha(static_cast<unsigned char>(text[pos + 2]))))) {
      // Inline HTML: drop the tag, keep its content.
      const std::size_t tag_end = text.find('>', pos);
      if (tag_end == std::string_view::npos) {
        out.push_back(c);
        ++pos;
      } else {
        out.push_back(' ');
        pos = tag_end + 1;
      }
    } else if (c == '[' && text.compare(pos, 2, "[[") == 0 && is_media_link(text, pos)) {
      const std::size_t after = skip_brackets(text, pos);
      if (after == std::string_view::npos) {
        out.append("[[");
        pos += 2;
      } else {
        pos = after;
      }
    } else if (c == '[' && is_external_link(text, pos)) {
      const std::size_t close = text.find(']', pos);
      if (close == std::string_view::npos) {
        out.push_back(c);
        ++pos;
        continue;
      }
      const std::string_view inner = text.substr(pos + 1, close - pos - 1);
      const std::size_t space = inner.find(' ');
      if (space != std::string_view::npos) out.append(inner.substr(space + 1));
      pos = close + 1;
    } else if (c == '=' && text.compare(pos, 2, "==") == 0) {
      break;
    } else if (c == '\'' && text.compare(pos, 2, "''") == 0) {
      while (pos < text.size() && text[pos] == '\'') ++pos;
    } else if (c == '_' && text.compare(pos, 2, "__") == 0) {
      std::size_t p = pos + 2;
      while (p < text.size() && std::isupper(static_cast<unsigned char>(text[p]))) ++p;
      if (p > pos + 2 && text.compare(p, 2, "__") == 0) {
        pos = p + 2;
      } else {
        out.push_back(c);
        ++pos;
      }
    } else if (c == '&') {
      const std::size_t consumed = decode_entity(text, pos, out);
      if (consumed == 0) {
        out.push_back(c);
        ++pos;
      } else {
        pos += consumed;
      }
    } else {
      out.push_back(c);
      ++pos;
    }
  }
  if (warnings) *warnings += local;
  return collapse_whitespace(out);
}

bool has_namespace_prefix(std::string_view target) {
  const std::size_t colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  const std::string prefix = lower_ascii(trim(target.substr(0, colon)));
  static constexpr std::array<std::string_view, 47> kNamespaces{
      "file",          "image",          "media",         "category",     "template",
      "wikipedia",     "wp",             "help",          "portal",       "draft",
      "user",          "talk",           "user talk",     "special",      "module",
      "mediawiki",     "wiktionary",     "wikt",          "wikisource",   "s",
      "w",             "commons",        "meta",          "m",            "wikiquote",
      "q",             "wikinews",       "n",             "wikibooks",    "b",
      "wikiversity",   "v",              "wikivoyage",    "voy",          "species",
      "d",             "wikidata",       "mw",            "category talk", "file talk",
      "template talk", "wikipedia talk", "help talk",     "portal talk",  "draft talk",
      "timedtext",     "simple"};
  if (std::find(kNamespaces.begin(), kNamespaces.end(), prefix) != kNamespaces.end()) return true;
  // Interlanguage prefixes: "fr", "de", "zh-yue", ...
  const std::size_t dash = prefix.find('-');
  const std::string_view lang = std::string_view(prefix).substr(0, dash);
  if (lang.size() < 2 || lang.size() > 3) return false;
  if (!std::all_of(prefix.begin(), prefix.end(), [](char ch) { return is_ascii_lower(ch) || ch == '-'; })) {
    return false;
  }
  return prefix == lower_ascii(target.substr(0, colon));
}

LinkedText render_wikilinks(std::string_view text, NodeId source, MarkupWarnings* warnings) {
  LinkedText result;
  std::string& out = result.text;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "[[") != 0) {
      out.push_back(text[pos++]);
      continue;
    }
    const std::size_t close = text.find("]]", pos + 2);
    const std::size_t nested = text.find("[[", pos + 2);
    if (close == std::string_view::npos || (nested != std::string_view::npos && nested < close)) {
      if (warnings) ++warnings->unclosed_links;
      out.append("[[");
      pos += 2;
      continue;
    }
    const std::string_view inner = text.substr(pos + 2, close - pos - 2);
    const std::size_t pipe = inner.find('|');
    std::string_view target = trim(inner.substr(0, pipe));
    if (!target.empty() && target.front() == ':') target = trim(target.substr(1));
    const bool namespaced = has_namespace_prefix(target);

    std::string display;
    if (pipe == std::string_view::npos) {
      display = std::string(target);
    } else {
      display = std::string(trim(inner.substr(pipe + 1)));
      if (display.empty()) {
        // Pipe trick: [[Paris (band)|]] displays "Paris".
        std::string_view shown = target;
        if (namespaced) shown = trim(shown.substr(shown.find(':') + 1));
        const std::size_t paren = shown.find(" (");
        if (paren != std::string_view::npos && shown.back() == ')') shown = shown.substr(0, paren);
        display = std::string(shown);
      }
    }
    pos = close + 2;
    while (pos < text.size() && is_ascii_lower(text[pos])) display.push_back(text[pos++]);

    const std::size_t begin = out.size();
    out.append(display);
    const std::size_t end = out.size();

    const std::string_view page = target.substr(0, target.find('#'));
    std::string normalized = normalize_title(page);
    if (!namespaced && !normalized.empty() && end > begin) {
      result.links.push_back(AnchorOccurrence{source, std::move(normalized), display, begin, end});
    }
  }
  return result;
}

}  // namespace anchorlink
