package org.fixture;

import java.util.List;
import java.util.Map;

class Store {
  private void bump() {}

  int size(List<String> items) {
    int unusedTotal = 0;
    // items.clear();
    // return 0;
    return items.size();
  }
}
