package org.fixture;

class Limits {
  public static final int MAX = 3;

  public static final int MIN = 0;

  /** Default. */
  public static final int DEFAULT = 1;
}
