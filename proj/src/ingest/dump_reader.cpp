#include "anchorlink/ingest/dump_reader.hpp"

#include <expat.h>

#include <cctype>
#include <cstdlib>
#include <cstring>

#include "anchorlink/common.hpp"
#include "anchorlink/text/utf8.hpp"

namespace anchorlink {

struct DumpReader::State {
  XML_Parser parser = nullptr;
  std::deque<RawPage> ready;
  RawPage page;
  bool in_page = false;
  bool has_title = false;
  bool has_text = false;
  std::string ns_text;
  std::string* capture = nullptr;
  std::uint64_t skipped = 0;

  static void on_start(void* user, const XML_Char* name, const XML_Char** attributes) {
    auto& s = *static_cast<State*>(user);
    if (std::strcmp(name, "page") == 0) {
      s.page = RawPage{};
      s.in_page = true;
      s.has_title = false;
      s.has_text = false;
      s.ns_text.clear();
      return;
    }
    if (!s.in_page) return;
    if (std::strcmp(name, "title") == 0) {
      s.page.title.clear();
      s.capture = &s.page.title;
      s.has_title = true;
    } else if (std::strcmp(name, "ns") == 0) {
      s.ns_text.clear();
      s.capture = &s.ns_text;
    } else if (std::strcmp(name, "text") == 0) {
      s.page.wikitext.clear();
      s.capture = &s.page.wikitext;
      s.has_text = true;
    } else if (std::strcmp(name, "redirect") == 0) {
      for (const XML_Char** attr = attributes; attr && *attr; attr += 2) {
        if (std::strcmp(attr[0], "title") == 0) {
          std::string target = normalize_title(attr[1]);
          if (!target.empty()) {
            s.page.is_redirect = true;
            s.page.redirect_target = std::move(target);
          }
        }
      }
    }
  }

  static void on_end(void* user, const XML_Char* name) {
    auto& s = *static_cast<State*>(user);
    s.capture = nullptr;
    if (!s.in_page || std::strcmp(name, "page") != 0) return;
    s.in_page = false;
    s.page.title = normalize_title(s.page.title);
    if (!s.has_title || !s.has_text || s.page.title.empty()) {
      ++s.skipped;
      return;
    }
    s.page.namespace_id = s.ns_text.empty() ? 0 : std::atoi(s.ns_text.c_str());
    if (!s.page.is_redirect) {
      if (auto target = parse_redirect_directive(s.page.wikitext)) {
        s.page.is_redirect = true;
        s.page.redirect_target = std::move(target);
      }
    }
    s.ready.push_back(std::move(s.page));
  }

  static void on_chars(void* user, const XML_Char* data, int length) {
    auto& s = *static_cast<State*>(user);
    if (s.capture) s.capture->append(data, static_cast<std::size_t>(length));
  }
};

DumpReader::DumpReader(std::istream& input, std::size_t chunk_size)
    : input_(input), buffer_(chunk_size), state_(std::make_unique<State>()) {
  state_->parser = XML_ParserCreate("UTF-8");
  if (!state_->parser) throw Error("cannot allocate XML parser");
  XML_SetUserData(state_->parser, state_.get());
  XML_SetElementHandler(state_->parser, &State::on_start, &State::on_end);
  XML_SetCharacterDataHandler(state_->parser, &State::on_chars);
}

DumpReader::~DumpReader() {
  if (state_ && state_->parser) XML_ParserFree(state_->parser);
}

std::uint64_t DumpReader::skipped_pages() const noexcept { return state_->skipped; }

bool DumpReader::fill() {
  if (finished_) return false;
  input_.read(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
  const auto count = static_cast<std::size_t>(input_.gcount());
  const bool last = count < buffer_.size();
  if (input_.bad()) throw Error("I/O error while reading dump");
  bytes_read_ += count;
  if (XML_Parse(state_->parser, buffer_.data(), static_cast<int>(count), last ? 1 : 0) ==
      XML_STATUS_ERROR) {
    throw ParseError(std::string("malformed XML: ") +
                         XML_ErrorString(XML_GetErrorCode(state_->parser)),
                     static_cast<std::uint64_t>(XML_GetCurrentByteIndex(state_->parser)));
  }
  finished_ = last;
  return true;
}

std::optional<RawPage> DumpReader::next() {
  while (state_->ready.empty()) {
    if (!fill()) return std::nullopt;
  }
  RawPage page = std::move(state_->ready.front());
  state_->ready.pop_front();
  return page;
}

std::optional<std::string> parse_redirect_directive(std::string_view wikitext) {
  std::size_t pos = 0;
  while (pos < wikitext.size() && std::isspace(static_cast<unsigned char>(wikitext[pos]))) ++pos;
  constexpr std::string_view kKeyword = "#redirect";
  if (wikitext.size() - pos < kKeyword.size()) return std::nullopt;
  for (std::size_t i = 0; i < kKeyword.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(wikitext[pos + i])) != kKeyword[i]) {
      return std::nullopt;
    }
  }
  pos += kKeyword.size();
  while (pos < wikitext.size() &&
         (wikitext[pos] == ':' || std::isspace(static_cast<unsigned char>(wikitext[pos])))) {
    ++pos;
  }
  if (wikitext.substr(pos, 2) != "[[") return std::nullopt;
  pos += 2;
  const std::size_t close = wikitext.find("]]", pos);
  if (close == std::string_view::npos) return std::nullopt;
  std::string_view target = wikitext.substr(pos, close - pos);
  target = target.substr(0, target.find('|'));
  target = target.substr(0, target.find('#'));
  std::string normalized = normalize_title(target);
  if (normalized.empty()) return std::nullopt;
  return normalized;
}

std::string normalize_title(std::string_view title) {
  std::string collapsed;
  collapsed.reserve(title.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < title.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(title, pos);
    if (cp == '_' || utf8::is_space(cp)) {
      pending_space = !collapsed.empty();
      continue;
    }
    if (pending_space) {
      collapsed.push_back(' ');
      pending_space = false;
    }
    if (collapsed.empty()) {
      utf8::append(collapsed, utf8::to_upper(cp));
    } else {
      collapsed.append(title.substr(start, pos - start));
    }
  }
  return collapsed;
}

}  // namespace anchorlink
