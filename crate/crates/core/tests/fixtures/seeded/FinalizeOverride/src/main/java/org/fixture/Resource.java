package org.fixture;

class Resource {
  @Override
  protected void finalize() throws Throwable {}
}
