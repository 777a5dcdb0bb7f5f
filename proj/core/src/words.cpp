#include "paff/words.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace paff {

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word invert(const Word& u) {
  Word out;
  out.reserve(u.size());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(Letter{it->gen, -it->exp});
  return out;
}

Word power(const Word& u, long n) {
  Word base = n < 0 ? invert(u) : u;
  long reps = n < 0 ? -n : n;
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (long i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word free_reduce(const Word& u) {
  Word out;
  out.reserve(u.size());
  for (const auto& l : u) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

namespace {

const Word& expand_def(const std::string& name, const std::map<std::string, Word>& defs,
                       std::map<std::string, Word>& done, std::vector<std::string>& stack) {
  if (auto it = done.find(name); it != done.end()) return it->second;
  for (const auto& s : stack) {
    if (s == name) {
      std::string cycle;
      for (const auto& t : stack) cycle += t + " -> ";
      throw std::invalid_argument("substitute: cyclic definitions: " + cycle + name);
    }
  }
  stack.push_back(name);
  Word out;
  for (const auto& l : defs.at(name)) {
    auto def = defs.find(l.gen);
    if (def == defs.end()) {
      out.push_back(l);
    } else {
      const Word& body = expand_def(l.gen, defs, done, stack);
      Word part = l.exp > 0 ? body : invert(body);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  stack.pop_back();
  return done.emplace(name, std::move(out)).first->second;
}

}  // namespace

Word substitute(const Word& u, const std::map<std::string, Word>& defs) {
  std::map<std::string, Word> done;
  std::vector<std::string> stack;
  Word out;
  for (const auto& l : u) {
    auto def = defs.find(l.gen);
    if (def == defs.end()) {
      out.push_back(l);
      continue;
    }
    const Word& body = expand_def(l.gen, defs, done, stack);
    Word part = l.exp > 0 ? body : invert(body);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long net_exponent(const Word& u, const std::string& gen) {
  long total = 0;
  for (const auto& l : u)
    if (l.gen == gen) total += l.exp;
  return total;
}

PAHomeo evaluate(const Word& u, const Assignment& env, const QuadIrr& alpha) {
  // Fold from the right (associativity makes the result identical); letters
  // then enter as the outer factor, where rotations reduce to plain shifts.
  // Runs of rotation letters are accumulated into one shift before being
  // applied. The inverses of the non-rotation maps are cached.
  std::map<std::string, PAHomeo> inverses;
  PAHomeo acc = PAHomeo::identity();
  AlphaVal pending;
  auto flush = [&]() {
    if (pending.is_zero()) return;
    acc = compose(PAHomeo::rotation(pending, alpha), acc, alpha);
    pending = AlphaVal();
  };
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    auto found = env.gens.find(it->gen);
    if (found == env.gens.end())
      throw std::invalid_argument("evaluate: no map assigned to generator '" + it->gen + "'");
    const PAHomeo& map = found->second;
    if (map.piece_count() == 1) {
      const AlphaVal& c = map.pieces()[0].image;
      pending = (it->exp > 0) ? pending + c : pending - c;
      continue;
    }
    flush();
    if (it->exp > 0) {
      acc = compose(map, acc, alpha);
    } else {
      auto inv = inverses.find(it->gen);
      if (inv == inverses.end()) inv = inverses.emplace(it->gen, inverse(map, alpha)).first;
      acc = compose(inv->second, acc, alpha);
    }
  }
  flush();
  return acc;
}

std::string word_to_text(const Word& u) {
  std::string out;
  for (const auto& l : u) {
    if (!out.empty()) out += " ";
    out += l.gen;
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

Word word_from_text(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int exp = 1;
    if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
      exp = -1;
      token = token.substr(0, token.size() - 3);
    }
    if (token.empty()) throw std::invalid_argument("word_from_text: empty generator name");
    for (char c : token) {
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_';
      if (!ok)
        throw std::invalid_argument("word_from_text: bad character in token '" + token + "'");
    }
    out.push_back(Letter{std::move(token), exp});
  }
  return out;
}

}  // namespace paff
