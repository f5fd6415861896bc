package org.fixture;

import java.io.IOException;

class Reader {
  /**
   * Parses the text.
   *
   * @param <T> the result kind
   * @param in the text to parse
   * @return the parsed value
   * @throws IOException when the text cannot be read
   */
  <T> int parse(String in) throws IOException {
    return in.length();
  }

  /** Closes the reader. */
  void close() {}
}
